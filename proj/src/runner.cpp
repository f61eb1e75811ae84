#include "nadyn/runner.hpp"

#include "nadyn/degree_growth.hpp"
#include "nadyn/dynamics_p1.hpp"
#include "nadyn/entropy.hpp"
#include "nadyn/error.hpp"
#include "nadyn/noetherian.hpp"
#include "nadyn/reduction.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <random>

namespace nadyn {

namespace {

using nlohmann::json;

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(Errc::Schema, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t size_field(const json& j, const char* key, std::size_t fallback) {
    if (!j.contains(key)) return fallback;
    const auto& v = j.at(key);
    if (!v.is_number_unsigned()) fail(Errc::Schema, std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Scalar scalar_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) fail(Errc::Schema, std::string("'") + key + "' must be a rational string");
    try {
        return parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
        fail(Errc::Schema, e.what());
    }
}

PValue pvalue_field(const json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) fail(Errc::Schema, std::string("'") + key + "' must be a string like \"p^-1\"");
    try {
        return PValue::parse(v.get<std::string>());
    } catch (const Error& e) {
        fail(Errc::Schema, e.what());
    }
}

const json& map_of(const json& in) { return in.contains("map") ? in.at("map") : in; }

// ---- subcommands ---------------------------------------------------------

std::string good_reduction(const json& in) {
    const auto f = p1_map_from_json(map_of(in));
    const auto v = valuation(Scalar(resultant(f)), f.prime());
    json out;
    out["good"] = good_reduction_test(f);
    out["res_valuation"] = v ? json(*v) : json(nullptr);
    return out.dump() + "\n";
}

std::string degseq(const json& in, const RunConfig& cfg) {
    const auto f = plane_map_from_json(field(in, "map"));
    const auto nmax = cfg.horizon.value_or(size_field(in, "nmax", 6));
    SymbolicBudget budget;
    budget.coeff_bits = cfg.budget_bits;
    const auto seq = plane_degree_sequence(f, static_cast<unsigned>(nmax), budget);
    std::string out = "n,degree,lambda_estimate\n";
    for (std::size_t n = 1; n <= seq.entries.size(); ++n)
        out += std::to_string(n) + "," + std::to_string(seq.entries[n - 1]) + "," +
               fmt(std::pow(static_cast<double>(seq.entries[n - 1]), 1.0 / static_cast<double>(n))) + "\n";
    return out;
}

std::string dyndeg(const json& in) {
    std::vector<std::vector<std::int64_t>> A;
    try {
        A = field(in, "matrix").get<std::vector<std::vector<std::int64_t>>>();
    } catch (const json::exception& e) {
        fail(Errc::Schema, std::string("matrix: ") + e.what());
    }
    const auto lambdas = monomial_dynamical_degrees(A);
    json out;
    out["lambda"] = json::array();
    for (std::size_t k = 0; k < lambdas.size(); ++k)
        out["lambda"].push_back(
            {{"k", k}, {"value", lambdas[k].value}, {"lower", lambdas[k].lower}, {"upper", lambdas[k].upper}});
    return out.dump() + "\n";
}

std::vector<DiskPoint> random_sample(std::mt19937_64& rng, const Prime& p, std::size_t count) {
    // Per point, in order: chart, numerator, denominator, exponent, radius.
    std::uniform_int_distribution<int> chart(0, 3), exponent(0, 2), kind(0, 1), depth(1, 4);
    std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
    std::vector<DiskPoint> out;
    while (out.size() < count) {
        const Chart c = chart(rng) == 0 ? Chart::W : Chart::Z;
        const long a = num(rng), b = den(rng);
        const int e = exponent(rng);
        const bool type1 = kind(rng) == 0;
        const int r = depth(rng);
        if (b % p.value() == 0) continue;
        Scalar center(a, b);
        center.canonicalize();
        for (int i = 0; i < e; ++i) center *= p.value();
        out.push_back(DiskPoint::make(c, center, type1 ? PValue::zero() : PValue::power(-r), p));
    }
    return out;
}

std::vector<DiskPoint> sample_points(const json& spec, const Prime& p, const RunConfig& cfg) {
    const auto kind = field(spec, "kind");
    if (kind == "explicit") {
        std::vector<DiskPoint> out;
        for (const auto& x : field(spec, "points")) out.push_back(disk_point_from_json(x, p));
        return out;
    }
    if (kind == "preimage_tree") {
        const auto tree = preimage_tree(scalar_field(spec, "c"), scalar_field(spec, "target"),
                                        static_cast<unsigned>(size_field(spec, "depth", 1)),
                                        static_cast<unsigned>(size_field(spec, "precision", 24)), p);
        std::vector<DiskPoint> out;
        for (const auto* leaf : tree.leaves()) out.push_back(DiskPoint::classical(leaf->value, p));
        return out;
    }
    if (kind == "random") {
        std::mt19937_64 rng(cfg.seed);
        return random_sample(rng, p, cfg.sample.value_or(size_field(spec, "count", 200)));
    }
    fail(Errc::Schema, "sample kind must be explicit, preimage_tree or random");
}

std::string entropy_sample(const json& in, const RunConfig& cfg) {
    const auto f = p1_map_from_json(field(in, "map"));
    const auto eps = pvalue_field(in, "eps");
    const std::size_t N = cfg.horizon.value_or(size_field(in, "N", 10));
    if (N == 0) fail(Errc::InvalidArgument, "N must be positive");
    const auto sample = sample_points(field(in, "sample"), f.prime(), cfg);
    const auto table = disk_orbit_table(f, sample, N - 1);
    const auto E = eps_entourage(table.registry, eps);
    const auto rows = entropy_series(table.table, E, N);
    std::string out = "n,S_tilde,R_tilde,rate\n";
    std::vector<std::size_t> S;
    for (const auto& r : rows) {
        S.push_back(r.S);
        out += std::to_string(r.n) + "," + std::to_string(r.S) + "," + std::to_string(r.R) + ",";
        if (S.size() >= 3) out += fmt(entropy_rate(S).rate);
        out += "\n";
    }
    return out;
}

std::string eps_reduce(const json& in) {
    const Prime p(field(in, "p").get<long>());
    const auto eps = pvalue_field(in, "eps");
    std::vector<DiskPoint> pts;
    for (const auto& x : field(in, "points")) pts.push_back(disk_point_from_json(x, p));
    json out;
    out["eps"] = eps.str();
    out["classes"] = json::array();
    for (const auto& cell : partition_by_eps(pts, eps))
        out["classes"].push_back({{"key", eps_class_key(pts[cell.front()], eps)}, {"members", cell}});
    return out.dump() + "\n";
}

std::vector<Subset> cover_field(const json& j, std::size_t size) {
    std::vector<Subset> cover;
    for (const auto& member : j) {
        Subset s = 0;
        for (const auto& x : member) {
            const auto i = x.get<std::size_t>();
            if (i >= size) fail(Errc::Schema, "cover index out of range");
            s |= Subset{1} << i;
        }
        cover.push_back(s);
    }
    return cover;
}

std::string noetherian(const json& in, const RunConfig& cfg) {
    json out;
    std::optional<FinitePoset> X;
    SelfMap f;
    std::vector<Subset> cover;
    if (in.contains("ring")) {
        const auto R = finite_ring_from_json(in.at("ring"));
        const auto L = enumerate_ideals(R);
        X = ideal_space(L);
        const auto& endo = field(in, "endomorphism");
        std::vector<std::uint32_t> phi;
        if (endo.contains("power")) phi = power_endomorphism(R, endo.at("power").get<unsigned>());
        else phi = field(endo, "images").get<std::vector<std::uint32_t>>();
        f = induced_ideal_map(R, L, phi);
        const auto& c = field(in, "cover");
        cover = c == "principal" ? principal_opens(R, L) : cover_field(c, L.size());
        out["ring"] = R.str();
        out["points"] = L.names;
    } else {
        const auto& P = field(in, "poset");
        std::vector<std::pair<std::size_t, std::size_t>> less;
        for (const auto& e : field(P, "less")) less.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
        X = FinitePoset::from_relations(size_field(P, "size", 0), less);
        f = field(in, "map").get<SelfMap>();
        cover = cover_field(field(in, "cover"), X->size());
    }
    out["map"] = f;
    out["priestley"] = priestley_check(*X).holds;
    const auto atoms = atomicity_check(f);
    out["invariant_measures"] = {{"cycles", periodic_cycles(f)}, {"dimension", atoms.dimension}, {"atomic", atoms.atomic}};
    const std::size_t n = size_field(in, "n", 1);
    out["N_n"] = {{"n", n}, {"value", cover_complexity(*X, f, cover, n).value}};
    const Scalar eps = in.contains("epsilon") ? scalar_field(in, "epsilon") : Scalar(1, 2);
    out["certificate"] = to_json(recurrence_certificate(*X, f, cover, eps, cfg.horizon.value_or(size_field(in, "horizon", 0))));
    return out.dump(2) + "\n";
}

std::string keylemma(const json& in, const RunConfig& cfg) {
    const auto d1 = static_cast<unsigned>(size_field(in, "d1", 1));
    const auto d2 = static_cast<unsigned>(size_field(in, "d2", 1));
    const auto nmax = static_cast<unsigned>(cfg.horizon.value_or(size_field(in, "nmax", 30)));
    const Scalar eps = in.contains("eps") ? scalar_field(in, "eps") : Scalar(1);
    const auto rep = key_lemma_check(d1, d2, eps, nmax);
    std::string out = "n,volume,C\n";
    for (unsigned n = 1; n <= nmax; ++n)
        out += std::to_string(n) + "," + product_map_volume(d1, d2, n).get_str() + "," + scalar_str(rep.C[n - 1]) + "\n";
    return out;
}

}  // namespace

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"good-reduction", "degseq",     "dyndeg",  "entropy-sample",
                                                "eps-reduce",     "noetherian", "keylemma"};
    return names;
}

RunResult run(const RunConfig& cfg, const std::string& input) {
    RunResult r;
    try {
        if (cfg.budget_bits == 0) fail(Errc::InvalidArgument, "budget must be positive");
        if (cfg.horizon && *cfg.horizon == 0) fail(Errc::InvalidArgument, "horizon must be positive");
        if (cfg.sample && *cfg.sample == 0) fail(Errc::InvalidArgument, "sample size must be positive");
        json in;
        try {
            in = json::parse(input);
        } catch (const json::exception& e) {
            fail(Errc::Schema, std::string("input is not JSON: ") + e.what());
        }
        try {
            const auto& s = cfg.subcommand;
            if (s == "good-reduction") r.output = good_reduction(in);
            else if (s == "degseq") r.output = degseq(in, cfg);
            else if (s == "dyndeg") r.output = dyndeg(in);
            else if (s == "entropy-sample") r.output = entropy_sample(in, cfg);
            else if (s == "eps-reduce") r.output = eps_reduce(in);
            else if (s == "noetherian") r.output = noetherian(in, cfg);
            else if (s == "keylemma") r.output = keylemma(in, cfg);
            else fail(Errc::InvalidArgument, "unknown subcommand '" + s + "'");
        } catch (const json::exception& e) {
            fail(Errc::Schema, e.what());
        }
    } catch (const Error& e) {
        r.output.clear();
        r.error = e.name();
        r.message = e.what();
        switch (e.code()) {
            case Errc::Schema: r.code = ExitCode::Schema; break;
            case Errc::BudgetExceeded:
            case Errc::SearchBudget: r.code = ExitCode::Budget; break;
            default: r.code = ExitCode::Domain;
        }
    } catch (const std::exception& e) {
        r.output.clear();
        r.code = ExitCode::Domain;
        r.error = "InternalError";
        r.message = e.what();
    }
    return r;
}

}  // namespace nadyn
