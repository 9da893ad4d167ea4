// deltaw: homology of moduli spaces of weighted stable tropical curves.
//
// Subcommands:
//   homology  compute reduced homology of Delta_{g,w} for one weight vector
//   verify    check a closed-form prediction against direct computation
//   table     reproduce the survey tables row by row
//
// Exit codes: 0 success / all-pass, 1 parse or usage error, 2 capacity
// limit hit, 3 table completed partially.

#include "deltaw/cache.hpp"
#include "deltaw/delta0.hpp"
#include "deltaw/genus_one.hpp"
#include "deltaw/homology.hpp"
#include "deltaw/predictions.hpp"
#include "deltaw/version.hpp"
#include "deltaw/weight_expr.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace deltaw;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitPartial = 3;
constexpr int kExitInternal = 4;

// ---------------------------------------------------------------- coeffs

struct CoeffSpec {
    Coefficients coeffs = Coefficients::Z;
    std::uint64_t p = 0;
    std::string text = "Z";
};

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

CoeffSpec parse_coeffs(const std::string& s) {
    if (s == "Z") return {Coefficients::Z, 0, "Z"};
    if (s == "Q") return {Coefficients::Q, 0, "Q"};
    if (s.size() >= 2 && s[0] == 'F') {
        std::uint64_t p = 0;
        for (std::size_t i = 1; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("--coeffs: expected F<p> with numeric p, got '" + s + "'");
            p = p * 10 + static_cast<std::uint64_t>(s[i] - '0');
            if (p > 2'000'000'000ULL)
                throw std::invalid_argument("--coeffs: prime too large in '" + s + "'");
        }
        if (!is_prime(p))
            throw std::invalid_argument("--coeffs: " + std::to_string(p) + " is not prime");
        return {Coefficients::Fp, p, "F" + std::to_string(p)};
    }
    throw std::invalid_argument("--coeffs must be Z, Q or F<p>, got '" + s + "'");
}

// ------------------------------------------------------- result plumbing

struct HomologyEntry {
    int degree = 0;
    long long betti = 0;
    std::vector<long long> torsion;
};

// Everything the cache stores for one (weights, genus, coeffs) query; the
// printable documents (JSON or CSV) are derived from this, so a cache hit
// renders byte-identically to a fresh run.
struct ResultData {
    std::vector<HomologyEntry> homology;  // contiguous degree range
    std::vector<long long> f_vector;
    long long components = 0;
};

ResultData make_result(const HomologyProfile& prof, std::vector<long long> fvec,
                       long long components) {
    ResultData rd;
    rd.f_vector = std::move(fvec);
    rd.components = components;
    auto sup = prof.support();
    if (!sup.empty()) {
        int lo = std::min(0, sup.front());
        int hi = sup.back();
        for (int d = lo; d <= hi; ++d) {
            auto g = prof.group(d);
            rd.homology.push_back({d, g.betti, g.torsion});
        }
    }
    return rd;
}

std::string payload_dump(const ResultData& rd) {
    ordered_json j;
    auto harr = ordered_json::array();
    for (const auto& e : rd.homology)
        harr.push_back(ordered_json{{"degree", e.degree}, {"betti", e.betti}, {"torsion", e.torsion}});
    j["homology"] = std::move(harr);
    j["f_vector"] = rd.f_vector;
    j["components"] = rd.components;
    return j.dump();
}

ResultData payload_parse(const std::string& text) {
    ResultData rd;
    auto j = nlohmann::json::parse(text);
    for (const auto& e : j.at("homology")) {
        HomologyEntry he;
        he.degree = e.at("degree").get<int>();
        he.betti = e.at("betti").get<long long>();
        he.torsion = e.at("torsion").get<std::vector<long long>>();
        rd.homology.push_back(std::move(he));
    }
    rd.f_vector = j.at("f_vector").get<std::vector<long long>>();
    rd.components = j.at("components").get<long long>();
    return rd;
}

ordered_json result_document(const WeightVector& w, int genus, const std::string& coeffs,
                             const ResultData& rd) {
    ordered_json j;
    auto warr = ordered_json::array();
    for (const auto& r : w.entries())
        warr.push_back(ordered_json::array({r.numerator().convert_to<long long>(),
                                            r.denominator().convert_to<long long>()}));
    j["weights"] = std::move(warr);
    j["genus"] = genus;
    j["coeffs"] = coeffs;
    j["reduced"] = true;
    auto harr = ordered_json::array();
    for (const auto& e : rd.homology)
        harr.push_back(ordered_json{{"degree", e.degree}, {"betti", e.betti}, {"torsion", e.torsion}});
    j["homology"] = std::move(harr);
    j["f_vector"] = rd.f_vector;
    j["components"] = rd.components;
    return j;
}

std::string group_cell(const HomologyEntry& e) {
    DegreeHomology g;
    g.betti = e.betti;
    g.torsion = e.torsion;
    return group_str(g);
}

// One CSV row of homology groups, degrees low..high of the stored range.
std::string result_csv(const ResultData& rd) {
    if (rd.homology.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < rd.homology.size(); ++i) {
        if (i) out += ',';
        out += group_cell(rd.homology[i]);
    }
    return out;
}

// ------------------------------------------------------------ computation

struct ComputeOutcome {
    ResultData rd;
    double seconds = 0.0;
};

ComputeOutcome compute_result(const WeightVector& w, int genus, const CoeffSpec& cs) {
    auto t0 = std::chrono::steady_clock::now();
    ComputeOutcome out;
    if (genus == 0) {
        Delta0 d0 = build_delta0(w);
        HomologyOptions opts;
        opts.coeffs = cs.coeffs;
        opts.p = cs.p;
        HomologyProfile prof = homology(d0.cx, opts);
        ComplexStats stats = complex_stats(d0.cx);
        std::vector<long long> fvec(stats.f_vector.begin(), stats.f_vector.end());
        out.rd = make_result(prof, std::move(fvec), static_cast<long long>(stats.components));
    } else {
        GenusOneComplex gc = build_genus1(w);
        HomologyOptions opts;
        opts.coeffs = Coefficients::Q;
        opts.crosscheck = false;
        HomologyProfile prof = chain_homology(gc.cc, opts);
        std::vector<long long> fvec;
        for (std::size_t i = 1; i < gc.cc.dims.size(); ++i)
            fvec.push_back(static_cast<long long>(gc.cc.dims[i]));
        out.rd = make_result(prof, std::move(fvec), prof.betti(0) + 1);
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

std::optional<ResultCache> open_cache(const std::string& flag_dir) {
    if (!flag_dir.empty()) return ResultCache(flag_dir);
    if (const char* env = std::getenv("DELTAW_CACHE"); env && *env) return ResultCache(env);
    return std::nullopt;
}

// Returns the result, consulting/filling the cache when one is configured.
ResultData cached_result(const std::optional<ResultCache>& cache, const WeightVector& w,
                         int genus, const CoeffSpec& cs) {
    std::string key = canonical_key(w, genus, cs.text, "homology");
    if (cache) {
        if (auto rec = cache->lookup(key)) return payload_parse(rec->payload);
    }
    ComputeOutcome out = compute_result(w, genus, cs);
    if (cache) {
        ResultRecord rec;
        rec.key = key;
        rec.command = "homology";
        rec.payload = payload_dump(out.rd);
        rec.engine_version = kEngineVersion;
        rec.seconds = out.seconds;
        cache->store(rec);
    }
    return out.rd;
}

// --------------------------------------------------------------- homology

struct HomologyArgs {
    std::string expr;
    std::string coeffs = "Z";
    bool coeffs_given = false;
    int genus = 0;
    bool csv = false;
    std::string cache_dir;
};

int run_homology(const HomologyArgs& a) {
    WeightVector w = parse_weight_expr(a.expr);
    CoeffSpec cs = parse_coeffs(a.coeffs);
    if (a.genus == 1) {
        if (a.coeffs_given && cs.coeffs != Coefficients::Q)
            throw std::invalid_argument(
                "genus 1 homology is computed with rational coefficients; use --coeffs Q");
        cs = {Coefficients::Q, 0, "Q"};
    }
    auto cache = open_cache(a.cache_dir);
    ResultData rd = cached_result(cache, w, a.genus, cs);
    if (a.csv)
        std::cout << result_csv(rd) << '\n';
    else
        std::cout << result_document(w, a.genus, cs.text, rd).dump(2) << '\n';
    return kExitOk;
}

// ------------------------------------------------------------------ table

struct TableArgs {
    std::string family = "custom";
    std::string n_range;
    std::vector<std::string> exprs;
    int genus = 0;
    std::string coeffs = "Z";
    bool json = false;
    std::string cache_dir;
};

std::pair<int, int> parse_range(const std::string& text, std::pair<int, int> fallback) {
    if (text.empty()) return fallback;
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (a > b) throw std::invalid_argument("");
        return {a, b};
    } catch (const std::exception&) {
        throw std::invalid_argument("--n-range: expected A..B with A <= B, got '" + text + "'");
    }
}

int run_table(const TableArgs& a) {
    CoeffSpec cs = parse_coeffs(a.coeffs);
    if (a.genus == 1) cs = {Coefficients::Q, 0, "Q"};
    auto cache = open_cache(a.cache_dir);

    std::vector<WeightVector> rows;
    if (a.family == "custom") {
        if (a.exprs.empty())
            throw std::invalid_argument("table --family custom needs at least one weight expression");
        for (const auto& e : a.exprs) rows.push_back(parse_weight_expr(e));
    } else {
        long long ell = 0;
        std::pair<int, int> def;
        if (a.family == "half") { ell = 2; def = {5, 8}; }
        else if (a.family == "third") { ell = 3; def = {6, 8}; }
        else if (a.family == "fourth") { ell = 4; def = {7, 8}; }
        else if (a.family == "fifth") { ell = 5; def = {8, 8}; }
        else throw std::invalid_argument("unknown --family '" + a.family +
                                         "' (use half, third, fourth, fifth or custom)");
        auto [lo, hi] = parse_range(a.n_range, def);
        if (lo < 3) throw std::invalid_argument("--n-range: n must be at least 3");
        for (int n = lo; n <= hi; ++n) {
            std::vector<Rational> entries{Rational(1), Rational(1)};
            for (int i = 0; i < n - 2; ++i) entries.emplace_back(1, ell);
            rows.emplace_back(std::move(entries));
        }
    }

    struct Row {
        std::string expr;
        bool capacity = false;
        std::string message;
        ResultData rd;
    };
    std::vector<Row> done;
    bool partial = false;
    for (const auto& w : rows) {
        Row row;
        row.expr = format_weight_expr(w);
        try {
            row.rd = cached_result(cache, w, a.genus, cs);
        } catch (const CapacityError& e) {
            row.capacity = true;
            row.message = e.what();
            partial = true;
        }
        done.push_back(std::move(row));
    }

    if (a.json) {
        ordered_json out;
        auto arr = ordered_json::array();
        for (const auto& row : done) {
            if (row.capacity) {
                arr.push_back(ordered_json{{"weights_expr", row.expr}, {"error", "capacity"},
                                           {"detail", row.message}});
            } else {
                auto doc = result_document(parse_weight_expr(row.expr), a.genus, cs.text, row.rd);
                arr.push_back(std::move(doc));
            }
        }
        out["rows"] = std::move(arr);
        std::cout << out.dump(2) << '\n';
    } else {
        int gmax = 0;
        for (const auto& row : done)
            if (!row.capacity && !row.rd.homology.empty())
                gmax = std::max(gmax, row.rd.homology.back().degree);
        std::cout << "weights";
        for (int d = 0; d <= gmax; ++d)
            std::cout << ',' << (d == 0 ? "H~0" : "H" + std::to_string(d));
        std::cout << '\n';
        for (const auto& row : done) {
            std::cout << '"' << row.expr << '"';
            if (row.capacity) {
                std::cout << ",CAPACITY\n";
                continue;
            }
            for (int d = 0; d <= gmax; ++d) {
                std::string cell = "0";
                for (const auto& e : row.rd.homology)
                    if (e.degree == d) cell = group_cell(e);
                std::cout << ',' << cell;
            }
            std::cout << '\n';
        }
    }
    return partial ? kExitPartial : kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
    std::string theorem;
    int n_max = -1;
    int trials = -1;
    int m = -1;
    int k = -1;
    int ell_max = 5;
    int tail_max = 3;
    int r_max = 8;
    std::uint64_t seed = 20250825ULL;
};

struct Reporter {
    int pass = 0;
    int fail = 0;
    void check(bool ok, const std::string& line) {
        (ok ? pass : fail)++;
        std::cout << (ok ? "PASS " : "FAIL ") << line << '\n';
    }
    int finish(const std::string& name) {
        std::cout << name << ": " << pass << "/" << (pass + fail) << " passed\n";
        return fail == 0 ? kExitOk : kExitUsage;
    }
};

std::vector<Rational> random_tail(std::mt19937_64& rng, int len, int max_den = 7) {
    std::uniform_int_distribution<int> den_dist(1, max_den);
    std::vector<Rational> u;
    for (int i = 0; i < len; ++i) {
        int den = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(1, den);
        u.emplace_back(num_dist(rng), den);
    }
    return u;
}

WeightVector with_ones(int ones, std::vector<Rational> tail) {
    std::vector<Rational> entries;
    for (int i = 0; i < ones; ++i) entries.emplace_back(1);
    for (auto& r : tail) entries.push_back(std::move(r));
    return WeightVector(std::move(entries));
}

WeightVector heavy_light_weights(int m, int k) {
    std::vector<Rational> entries;
    for (int i = 0; i < m; ++i) entries.emplace_back(1);
    for (int i = 0; i < k; ++i) entries.emplace_back(1, k + 1);
    return WeightVector(std::move(entries));
}

std::string describe(const WeightVector& w) { return format_weight_expr(w); }

int verify_gm_like(const VerifyArgs& a, bool with_shelling, const std::string& name) {
    int trials = a.trials > 0 ? a.trials : 25;
    int umax = a.n_max > 0 ? a.n_max : 6;
    std::mt19937_64 rng(a.seed);
    Reporter rep;
    std::uniform_int_distribution<int> len_dist(1, umax);
    for (int t = 0; t < trials; ++t) {
        auto u = random_tail(rng, len_dist(rng));
        WeightVector w = with_ones(2, u);
        HomologyProfile want = predicted_delta0_profile(w);
        HomologyProfile got = homology(build_delta0(w).cx);
        bool ok = (want == got) && got.torsion_free();
        std::string line = name + " w=(" + describe(w) + ") direct " + got.str();
        if (with_shelling) {
            WeightVector uvec{std::vector<Rational>(u)};
            SimplicialComplex du = build_delta_u(uvec);
            if (du.face_count(0) > 0) {
                bool shell = verify_shelling(du, lex_facet_order(uvec));
                ok = ok && shell;
                line += shell ? " shelling ok" : " shelling FAILED";
            }
        }
        rep.check(ok, line);
    }
    return rep.finish(name);
}

int verify_shelling_cmd(const VerifyArgs& a) {
    int trials = a.trials > 0 ? a.trials : 100;
    std::mt19937_64 rng(a.seed);
    Reporter rep;
    std::uniform_int_distribution<int> len_dist(2, a.r_max);
    int produced = 0, attempts = 0;
    while (produced < trials && attempts < trials * 50) {
        ++attempts;
        auto u = random_tail(rng, len_dist(rng));
        WeightVector uvec{std::vector<Rational>(u)};
        SimplicialComplex du = build_delta_u(uvec);
        if (du.face_count(0) == 0) continue;  // no facets to order
        ++produced;
        bool ok = verify_shelling(du, lex_facet_order(uvec));
        rep.check(ok, "shelling u=(" + describe(uvec) + ") facets=" +
                          std::to_string(lex_facet_order(uvec).facets.size()));
    }
    if (produced < trials)
        rep.check(false, "shelling: could not draw enough nonempty complexes");
    return rep.finish("shelling");
}

int verify_heavylight(const VerifyArgs& a) {
    Reporter rep;
    std::vector<std::pair<int, int>> cases;
    if (a.m >= 2 && a.k >= 0) {
        cases.emplace_back(a.m, a.k);
    } else {
        int nmax = a.n_max > 0 ? a.n_max : 7;
        for (int m = 2; m <= nmax; ++m)
            for (int k = 0; m + k <= nmax; ++k)
                if (m + k >= 4) cases.emplace_back(m, k);
    }
    for (auto [m, k] : cases) {
        SphereWedge pred = heavy_light_prediction(m, k);
        WeightVector w = heavy_light_weights(m, k);
        HomologyProfile got = homology(build_delta0(w).cx);
        HomologyProfile want;
        want.min_degree = pred.dimension;
        want.reduced = true;
        want.add_free(pred.dimension, pred.count);
        bool ok = (got == want) && rep_dimension(m, k) == pred.count;
        rep.check(ok, "heavylight m=" + std::to_string(m) + " k=" + std::to_string(k) +
                          ": count " + std::to_string(pred.count) + ", dim " +
                          std::to_string(pred.dimension));
    }
    return rep.finish("heavylight");
}

int verify_gaps(const VerifyArgs& a) {
    Reporter rep;
    int nmax = a.n_max > 0 ? a.n_max : 8;
    for (int ell = 2; ell <= a.ell_max; ++ell) {
        for (int n = 4; n <= nmax; ++n) {
            std::vector<Rational> entries{Rational(1), Rational(1)};
            for (int i = 0; i < n - 2; ++i) entries.emplace_back(1, ell);
            WeightVector w(std::move(entries));
            HomologyProfile got = homology(build_delta0(w).cx);
            std::vector<int> supv = got.support();
            std::set<int> sup(supv.begin(), supv.end());
            std::set<int> want = gaps_support(n, ell);
            std::ostringstream line;
            line << "gaps l=" << ell << " n=" << n << " support {";
            bool first = true;
            for (int d : sup) { line << (first ? "" : ",") << d; first = false; }
            line << "}";
            rep.check(sup == want && got.torsion_free(), line.str());
        }
    }
    return rep.finish("gaps");
}

int verify_disconnected(const VerifyArgs& a) {
    Reporter rep;
    int m = a.m > 0 ? a.m : 2;
    int k = a.k > 0 ? a.k : 2;
    if (m < 1 || k < 2) throw std::invalid_argument("B1 needs --m >= 1 and --k >= 2");
    SphereWedge pred = disconnected_prediction(m, k);
    std::vector<Rational> entries;
    for (int i = 0; i < 2 * m; ++i) entries.emplace_back(1, m);
    for (int i = 0; i < k; ++i) entries.emplace_back(1, 2 * m * k + 1);
    WeightVector w(std::move(entries));
    Delta0 d0 = build_delta0(w);
    ComplexStats stats = complex_stats(d0.cx);
    HomologyProfile got = homology(d0.cx);
    long long comps = pred.count * (k == 2 ? 2 : 1);
    HomologyProfile want;
    want.reduced = true;
    want.add_free(0, comps - 1);
    if (k > 2) want.add_free(pred.dimension, pred.count);
    bool ok = static_cast<long long>(stats.components) == comps && got == want;
    rep.check(ok, "B1 m=" + std::to_string(m) + " k=" + std::to_string(k) + ": " +
                      std::to_string(pred.count) + " spheres S^" + std::to_string(pred.dimension) +
                      ", components " + std::to_string(stats.components));
    return rep.finish("B1");
}

int verify_double_cover_cmd(const VerifyArgs& a, const std::string& name) {
    Reporter rep;
    int k = a.k > 0 ? a.k : 2;
    int m = a.m > 0 ? a.m : 2;
    if (m < 2 || m > k) throw std::invalid_argument(name + " needs 2 <= m <= k");
    int n = 2 * k + 2 + m;
    std::vector<Rational> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back(1, k);
    WeightVector w(std::move(entries));

    Delta0 d0 = build_delta0(w);
    HomologyProfile base = homology(d0.cx);
    DegreeHomology h1 = base.group(1);
    rep.check(h1.betti == 0 && h1.torsion == std::vector<long long>{2},
              name + " base H1 = " + group_str(h1) + " (expect Z/2)");

    DoubleCover cover = build_double_cover(d0);
    SimplicialComplex flag = build_rank_selected_flag(n, k + 1);
    rep.check(same_labeled_complex(cover.cx, flag),
              name + " cover equals rank-selected flag complex (" + std::to_string(n) + "," +
                  std::to_string(k + 1) + ")");

    long long chi_base = complex_stats(d0.cx).reduced_euler + 1;
    long long chi_cover = complex_stats(cover.cx).reduced_euler + 1;
    rep.check(chi_cover == 2 * chi_base,
              name + " Euler doubles: " + std::to_string(chi_cover) + " = 2*" +
                  std::to_string(chi_base));

    HomologyProfile up = homology(cover.cx);
    bool concentrated = up.torsion_free();
    for (int d : up.support())
        if (d != m) concentrated = false;
    rep.check(up.betti(1) == 0 && up.group(1).torsion.empty() && concentrated,
              name + " cover H1 = 0 and homology concentrated in degree " + std::to_string(m) +
                  " (" + up.str() + ")");
    return rep.finish(name);
}

int verify_genus1(const VerifyArgs& a) {
    Reporter rep;
    int nmax = a.n_max > 0 ? a.n_max : 5;
    for (int m = 0; m <= nmax; ++m) {
        for (int k = 0; m + k <= nmax; ++k) {
            if (m + k < 1) continue;
            std::vector<Rational> entries;
            for (int i = 0; i < m; ++i) entries.emplace_back(1);
            for (int i = 0; i < k; ++i) entries.emplace_back(1, k + 1);
            WeightVector w(std::move(entries));
            HomologyProfile got = genus1_homology(w);
            HomologyProfile want = genus1_betti_prediction(m, k);
            rep.check(got == want, "C m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                       ": " + got.str());
        }
    }
    return rep.finish("C");
}

int verify_susp2(const VerifyArgs& a) {
    Reporter rep;
    std::vector<Rational> menu{Rational(1), Rational(1, 2), Rational(1, 3)};
    std::vector<std::vector<Rational>> tails;
    for (std::size_t i = 0; i < menu.size(); ++i) {
        tails.push_back({menu[i]});
        if (a.tail_max < 2) continue;
        for (std::size_t j = i; j < menu.size(); ++j) {
            tails.push_back({menu[i], menu[j]});
            if (a.tail_max < 3) continue;
            for (std::size_t l = j; l < menu.size(); ++l)
                tails.push_back({menu[i], menu[j], menu[l]});
        }
    }
    for (const auto& tail : tails) {
        WeightVector ws = with_ones(2, tail);
        WeightVector wl = with_ones(3, tail);
        bool ok = verify_double_suspension(ws, wl);
        rep.check(ok, "susp2 tail=(" + describe(WeightVector{std::vector<Rational>(tail)}) + ")");
    }
    return rep.finish("susp2");
}

int verify_divisibility(const VerifyArgs& a) {
    Reporter rep;
    int nmax = a.n_max > 0 ? a.n_max : 7;
    for (int m = 2; m <= nmax; ++m) {
        for (int k = 0; m + k <= nmax; ++k) {
            if (m + k < 4) continue;
            long long fact = 1;
            for (int i = 2; i <= m - 2; ++i) fact *= i;
            HomologyProfile got = homology(build_delta0(heavy_light_weights(m, k)).cx);
            bool ok = got.torsion_free();
            for (int d : got.support())
                if (got.betti(d) % fact != 0) ok = false;
            rep.check(ok, "divisibility m=" + std::to_string(m) + " k=" + std::to_string(k) +
                              ": all betti divisible by " + std::to_string(fact));
        }
    }
    return rep.finish("divisibility");
}

int run_verify(const VerifyArgs& a) {
    if (a.theorem == "A") return verify_gm_like(a, /*with_shelling=*/true, "A");
    if (a.theorem == "gm") return verify_gm_like(a, /*with_shelling=*/false, "gm");
    if (a.theorem == "shelling") return verify_shelling_cmd(a);
    if (a.theorem == "heavylight") return verify_heavylight(a);
    if (a.theorem == "gaps") return verify_gaps(a);
    if (a.theorem == "B1") return verify_disconnected(a);
    if (a.theorem == "B2") return verify_double_cover_cmd(a, "B2");
    if (a.theorem == "doublecover") return verify_double_cover_cmd(a, "doublecover");
    if (a.theorem == "C") return verify_genus1(a);
    if (a.theorem == "susp2") return verify_susp2(a);
    if (a.theorem == "divisibility") return verify_divisibility(a);
    throw std::invalid_argument(
        "unknown --theorem '" + a.theorem +
        "' (use A, B1, B2, C, gaps, heavylight, gm, shelling, doublecover, susp2 or divisibility)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homology of moduli spaces of weighted stable tropical curves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kEngineVersion);

    HomologyArgs ha;
    auto* hom = app.add_subcommand("homology", "reduced homology of Delta_{g,w}");
    hom->add_option("weights", ha.expr, "weight expression, e.g. \"1^2,1/2^4\"")->required();
    auto* copt = hom->add_option("--coeffs", ha.coeffs, "coefficients: Z, Q or F<p> (default Z)");
    hom->add_option("--genus", ha.genus, "genus: 0 or 1 (default 0)")
        ->check(CLI::Range(0, 1));
    bool hjson = false;
    hom->add_flag("--json", hjson, "JSON output (default)");
    hom->add_flag("--csv", ha.csv, "CSV output (one row of groups)");
    hom->add_option("--cache", ha.cache_dir, "cache directory (default $DELTAW_CACHE)");

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "check a theorem against direct computation");
    ver->add_option("--theorem", va.theorem,
                    "A, B1, B2, C, gaps, heavylight, gm, shelling, doublecover, susp2, divisibility")
        ->required();
    ver->add_option("--n-max", va.n_max, "size bound (theorem-specific)");
    ver->add_option("--trials", va.trials, "number of random trials");
    ver->add_option("--m", va.m, "parameter m");
    ver->add_option("--k", va.k, "parameter k");
    ver->add_option("--ell-max", va.ell_max, "largest 1/l weight family (gaps)");
    ver->add_option("--tail-max", va.tail_max, "largest tail length (susp2)")->check(CLI::Range(1, 3));
    ver->add_option("--r-max", va.r_max, "largest random tail size (shelling)");
    ver->add_option("--seed", va.seed, "random seed");

    TableArgs ta;
    auto* tab = app.add_subcommand("table", "reproduce the survey tables");
    tab->add_option("--family", ta.family, "half, third, fourth, fifth or custom");
    tab->add_option("--n-range", ta.n_range, "rows n=A..B (families only)");
    tab->add_option("exprs", ta.exprs, "weight expressions (custom family)");
    tab->add_option("--genus", ta.genus, "genus: 0 or 1 (default 0)")->check(CLI::Range(0, 1));
    tab->add_option("--coeffs", ta.coeffs, "coefficients: Z, Q or F<p> (default Z)");
    tab->add_flag("--json", ta.json, "JSON output (default CSV)");
    tab->add_option("--cache", ta.cache_dir, "cache directory (default $DELTAW_CACHE)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (hom->parsed()) {
            ha.coeffs_given = copt->count() > 0;
            return run_homology(ha);
        }
        if (ver->parsed()) return run_verify(va);
        if (tab->parsed()) return run_table(ta);
    } catch (const WeightParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
