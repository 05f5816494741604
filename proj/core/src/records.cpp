#include "lowop/records.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lowop {

namespace {

using nlohmann::json;

json witness_to_json(const InjectionWitness& w) {
    json pairs = json::array();
    for (auto [s, t] : w.pairs) pairs.push_back(json::array({s, t}));
    return json{{"pairs", pairs},
                {"direction", w.direction == Direction::WeaklyIncreasing ? "increasing"
                                                                         : "decreasing"}};
}

InjectionWitness witness_from_json(const json& j) {
    InjectionWitness w;
    w.direction = j.at("direction").get<std::string>() == "increasing"
                      ? Direction::WeaklyIncreasing
                      : Direction::WeaklyDecreasing;
    for (const auto& e : j.at("pairs")) w.pairs.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return w;
}

}  // namespace

std::string emit_json(const ResultRecord& r) {
    json j{{"p", r.p},      {"lambda", r.lambda}, {"mu", r.mu},
           {"i", r.i},      {"j", r.j},           {"A", r.A},
           {"class", to_string(r.cls)}};
    if (r.nu) j["nu"] = *r.nu;
    if (r.witness_d) j["witness_d"] = witness_to_json(*r.witness_d);
    if (r.witness_eps) j["witness_eps"] = witness_to_json(*r.witness_eps);
    json checks = json::object();
    if (r.checks.closure_oracle) checks["closure_oracle"] = *r.checks.closure_oracle;
    if (r.checks.nabla_oracle) checks["nabla_oracle"] = *r.checks.nabla_oracle;
    if (!checks.empty()) j["checks"] = checks;
    return j.dump();
}

ResultRecord parse_json(const std::string& line) {
    json j = json::parse(line);
    ResultRecord r;
    r.p = j.at("p").get<long long>();
    r.lambda = j.at("lambda").get<Weight>();
    r.mu = j.at("mu").get<Weight>();
    r.i = j.at("i").get<int>();
    r.j = j.at("j").get<int>();
    r.A = j.at("A").get<std::vector<int>>();
    auto cls = classification_from_string(j.at("class").get<std::string>());
    if (!cls) throw std::invalid_argument("parse_json: unknown classification");
    r.cls = *cls;
    if (j.contains("nu")) r.nu = j.at("nu").get<Weight>();
    if (j.contains("witness_d")) r.witness_d = witness_from_json(j.at("witness_d"));
    if (j.contains("witness_eps")) r.witness_eps = witness_from_json(j.at("witness_eps"));
    if (j.contains("checks")) {
        const auto& checks = j.at("checks");
        if (checks.contains("closure_oracle"))
            r.checks.closure_oracle = checks.at("closure_oracle").get<bool>();
        if (checks.contains("nabla_oracle"))
            r.checks.nabla_oracle = checks.at("nabla_oracle").get<bool>();
    }
    return r;
}

namespace {

std::string join_ll(const std::vector<long long>& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) out += (t ? ";" : "") + std::to_string(v[t]);
    return out;
}

std::string join_int(const std::vector<int>& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) out += (t ? ";" : "") + std::to_string(v[t]);
    return out;
}

std::string witness_cell(const std::optional<InjectionWitness>& w) {
    if (!w) return "";
    std::string out;
    for (std::size_t t = 0; t < w->pairs.size(); ++t)
        out += (t ? ";" : "") + std::to_string(w->pairs[t].first) + ">" +
               std::to_string(w->pairs[t].second);
    if (out.empty()) out = "empty";
    return out;
}

}  // namespace

std::string csv_header() { return "p,lambda,mu,i,j,A,class,nu,witness_d,witness_eps,checks"; }

std::string emit_csv(const ResultRecord& r) {
    std::ostringstream out;
    out << r.p << ',' << join_ll(r.lambda) << ',' << join_ll(r.mu) << ',' << r.i << ',' << r.j
        << ',' << join_int(r.A) << ',' << to_string(r.cls) << ',';
    if (r.nu) out << join_ll(*r.nu);
    out << ',' << witness_cell(r.witness_d) << ',' << witness_cell(r.witness_eps) << ',';
    std::string checks;
    if (r.checks.closure_oracle)
        checks += std::string("closure=") + (*r.checks.closure_oracle ? "ok" : "FAIL");
    if (r.checks.nabla_oracle) {
        if (!checks.empty()) checks += ";";
        checks += std::string("nabla=") + (*r.checks.nabla_oracle ? "ok" : "FAIL");
    }
    out << checks;
    return out.str();
}

}  // namespace lowop
