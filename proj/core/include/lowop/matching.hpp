#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace lowop {

enum class Direction {
    WeaklyIncreasing,  // theta(a) >= a
    WeaklyDecreasing,  // theta(a) <= a
};

// A monotone injection between integer sets, the certificate form of every
// existence criterion. pairs are (source, target), sorted by source.
struct InjectionWitness {
    std::vector<std::pair<int, int>> pairs;
    Direction direction = Direction::WeaklyIncreasing;

    bool operator==(const InjectionWitness&) const = default;
};

using EdgePredicate = std::function<bool(int source, int target)>;

// Pointwise re-validation: injectivity, monotonicity per the flag, edge
// predicate, and codomain membership.
bool validate_witness(const InjectionWitness& w, const std::vector<int>& sources,
                      const EdgePredicate& allowed, const std::vector<int>& codomain);

// Monotone injection from sources into codomain along allowed edges, found
// by augmenting-path matching in ascending source order; the witness is
// therefore canonical. Returns nullopt when none exists.
std::optional<InjectionWitness> find_injection(const std::vector<int>& sources,
                                               const EdgePredicate& allowed,
                                               const std::vector<int>& codomain,
                                               Direction direction);

// As above, but the injection must additionally cover every element of
// required_targets (these must lie in the codomain or no witness exists).
std::optional<InjectionWitness> find_injection_covering(const std::vector<int>& sources,
                                                        const EdgePredicate& allowed,
                                                        const std::vector<int>& codomain,
                                                        Direction direction,
                                                        const std::vector<int>& required_targets);

}  // namespace lowop
