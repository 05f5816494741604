#include "lowop/matching.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lowop/errors.hpp"

namespace lowop {

namespace {

bool monotone_ok(Direction d, int s, int t) {
    return d == Direction::WeaklyIncreasing ? t >= s : t <= s;
}

bool edge_ok(Direction d, const EdgePredicate& allowed, int s, int t) {
    return monotone_ok(d, s, t) && allowed(s, t);
}

struct MatchState {
    std::vector<int> sources;   // ascending
    std::vector<int> targets;   // ascending
    std::vector<std::vector<char>> edge;  // [si][ti]
    std::vector<int> match_of_target;     // ti -> si or -1
    std::vector<int> match_of_source;     // si -> ti or -1

    bool augment(int si, std::vector<char>& seen) {
        for (std::size_t ti = 0; ti < targets.size(); ++ti) {
            if (!edge[static_cast<std::size_t>(si)][ti] || seen[ti]) continue;
            seen[ti] = 1;
            if (match_of_target[ti] < 0 || augment(match_of_target[ti], seen)) {
                match_of_target[ti] = si;
                match_of_source[static_cast<std::size_t>(si)] = static_cast<int>(ti);
                return true;
            }
        }
        return false;
    }
};

MatchState build_state(const std::vector<int>& sources, const EdgePredicate& allowed,
                       const std::vector<int>& codomain, Direction direction) {
    MatchState st;
    st.sources = sources;
    std::sort(st.sources.begin(), st.sources.end());
    st.sources.erase(std::unique(st.sources.begin(), st.sources.end()), st.sources.end());
    st.targets = codomain;
    std::sort(st.targets.begin(), st.targets.end());
    st.targets.erase(std::unique(st.targets.begin(), st.targets.end()), st.targets.end());
    st.edge.assign(st.sources.size(), std::vector<char>(st.targets.size(), 0));
    for (std::size_t si = 0; si < st.sources.size(); ++si)
        for (std::size_t ti = 0; ti < st.targets.size(); ++ti)
            st.edge[si][ti] = edge_ok(direction, allowed, st.sources[si], st.targets[ti]) ? 1 : 0;
    st.match_of_target.assign(st.targets.size(), -1);
    st.match_of_source.assign(st.sources.size(), -1);
    return st;
}

// matching saturating all sources, or nullopt
bool saturate_sources(MatchState& st) {
    for (std::size_t si = 0; si < st.sources.size(); ++si) {
        std::vector<char> seen(st.targets.size(), 0);
        if (!st.augment(static_cast<int>(si), seen)) return false;
    }
    return true;
}

InjectionWitness extract(const MatchState& st, Direction direction) {
    InjectionWitness w;
    w.direction = direction;
    for (std::size_t si = 0; si < st.sources.size(); ++si)
        w.pairs.emplace_back(st.sources[si], st.targets[static_cast<std::size_t>(
                                                 st.match_of_source[si])]);
    return w;
}

}  // namespace

bool validate_witness(const InjectionWitness& w, const std::vector<int>& sources,
                      const EdgePredicate& allowed, const std::vector<int>& codomain) {
    std::set<int> src(sources.begin(), sources.end());
    std::set<int> cod(codomain.begin(), codomain.end());
    if (w.pairs.size() != src.size()) return false;
    std::set<int> used_sources, used_targets;
    for (auto [s, t] : w.pairs) {
        if (!src.count(s) || !cod.count(t)) return false;
        if (!used_sources.insert(s).second || !used_targets.insert(t).second) return false;
        if (!edge_ok(w.direction, allowed, s, t)) return false;
    }
    return true;
}

std::optional<InjectionWitness> find_injection(const std::vector<int>& sources,
                                               const EdgePredicate& allowed,
                                               const std::vector<int>& codomain,
                                               Direction direction) {
    MatchState st = build_state(sources, allowed, codomain, direction);
    if (!saturate_sources(st)) return std::nullopt;
    return extract(st, direction);
}

std::optional<InjectionWitness> find_injection_covering(const std::vector<int>& sources,
                                                        const EdgePredicate& allowed,
                                                        const std::vector<int>& codomain,
                                                        Direction direction,
                                                        const std::vector<int>& required_targets) {
    MatchState st = build_state(sources, allowed, codomain, direction);
    std::vector<int> required = required_targets;
    std::sort(required.begin(), required.end());
    required.erase(std::unique(required.begin(), required.end()), required.end());
    for (int t : required)
        if (!std::binary_search(st.targets.begin(), st.targets.end(), t)) return std::nullopt;
    if (!saturate_sources(st)) return std::nullopt;

    // second matching, saturating the required targets from the source side
    std::vector<int> req_match_source(required.size(), -1);     // req index -> si
    std::vector<int> source_req(st.sources.size(), -1);         // si -> req index
    auto target_index = [&](int t) {
        return static_cast<std::size_t>(
            std::lower_bound(st.targets.begin(), st.targets.end(), t) - st.targets.begin());
    };
    std::function<bool(std::size_t, std::vector<char>&)> augment_req =
        [&](std::size_t ri, std::vector<char>& seen) {
            std::size_t ti = target_index(required[ri]);
            for (std::size_t si = 0; si < st.sources.size(); ++si) {
                if (!st.edge[si][ti] || seen[si]) continue;
                seen[si] = 1;
                if (source_req[si] < 0 ||
                    augment_req(static_cast<std::size_t>(source_req[si]), seen)) {
                    source_req[si] = static_cast<int>(ri);
                    req_match_source[ri] = static_cast<int>(si);
                    return true;
                }
            }
            return false;
        };
    for (std::size_t ri = 0; ri < required.size(); ++ri) {
        std::vector<char> seen(st.sources.size(), 0);
        if (!augment_req(ri, seen)) return std::nullopt;
    }

    // Combine the two matchings: both a source-saturating and a
    // required-target-saturating matching exist, so one matching does both.
    // Walk alternating paths from each still-uncovered required target.
    std::set<int> required_set(required.begin(), required.end());
    for (std::size_t ri = 0; ri < required.size(); ++ri) {
        std::size_t start_ti = target_index(required[ri]);
        if (st.match_of_target[start_ti] >= 0) continue;
        std::size_t ti = start_ti;
        std::size_t guard = 0;
        while (true) {
            if (guard++ > st.sources.size() + st.targets.size() + 2)
                throw internal_error("find_injection_covering: alternating walk did not terminate");
            // ti is required here and uncovered in the current matching
            int cur_ri = static_cast<int>(
                std::lower_bound(required.begin(), required.end(), st.targets[ti]) -
                required.begin());
            std::size_t si = static_cast<std::size_t>(req_match_source[static_cast<std::size_t>(cur_ri)]);
            int old_ti = st.match_of_source[si];
            st.match_of_source[si] = static_cast<int>(ti);
            st.match_of_target[ti] = static_cast<int>(si);
            // old_ti >= 0 always: the matching saturated every source
            std::size_t next_ti = static_cast<std::size_t>(old_ti);
            st.match_of_target[next_ti] = -1;
            if (!required_set.count(st.targets[next_ti])) break;  // lost nothing required
            ti = next_ti;
        }
    }

    InjectionWitness w = extract(st, direction);
    if (!validate_witness(w, sources, allowed, codomain))
        throw internal_error("find_injection_covering: combined matching failed validation");
    for (int t : required) {
        bool covered = false;
        for (auto [s, tt] : w.pairs) covered = covered || tt == t;
        if (!covered)
            throw internal_error("find_injection_covering: required target left uncovered");
    }
    return w;
}

}  // namespace lowop
