#include "ybsl21/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ybsl21::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxResamples = 1000;

std::vector<Rational> parse_list(const std::string& text, std::size_t expected, const std::string& flag) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(flag + ": " + e.what());
        }
    }
    if (out.size() != expected) {
        throw ConfigError(flag + ": expected " + std::to_string(expected) + " comma-separated rationals, got " +
                          std::to_string(out.size()));
    }
    return out;
}

std::mt19937_64 derived_stream(std::uint64_t seed, std::uint64_t salt) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

// stream salts, one per kind of sampled object
constexpr std::uint64_t kSaltAlgebra = 1;
constexpr std::uint64_t kSaltLax = 2;
constexpr std::uint64_t kSaltRll = 3;
constexpr std::uint64_t kSaltYbe = 4;

bool verma_defined(const Weight& w) {
    try {
        for (auto kind : {VermaKind::A, VermaKind::B, VermaKind::V, VermaKind::W}) {
            for (int k = (kind == VermaKind::B ? 1 : 0); k <= 4; ++k) (void)verma_vector(w, kind, k);
        }
    } catch (const SingularWeight&) {
        return false;
    }
    return true;
}

std::vector<std::pair<ParamPair, bool>> ybe_pairs(const YbeConfig& c) {
    return {{ParamPair::from_weights(c.u - c.v, c.w1, 0, c.w2), c.u != c.v},
            {ParamPair::from_weights(c.u, c.w1, 0, c.w3), c.u != 0},
            {ParamPair::from_weights(c.v, c.w2, 0, c.w3), c.v != 0}};
}

std::string ybe_guard(const YbeConfig& c, int max_degree) {
    for (const auto& [p, used] : ybe_pairs(c)) {
        if (!used) continue;
        auto g = guard_violation(p, max_degree);
        if (!g.empty()) return g;
    }
    return {};
}

/// Runs one check, turning library exceptions into an error report.
class Collector {
public:
    explicit Collector(const RunConfig& cfg) : cfg_(cfg) {}

    template <class F>
    void add(const std::string& name, F&& f) {
        const auto start = std::chrono::steady_clock::now();
        CheckReport r;
        try {
            r = f();
        } catch (const std::exception& e) {
            r = CheckReport{};
            r.check_name = name;
            r.set_error(e.what());
        }
        if (r.check_name.empty()) r.check_name = name;
        if (cfg_.timing) {
            r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        }
        reports_.push_back(std::move(r));
    }

    std::vector<CheckReport> take() { return std::move(reports_); }

private:
    const RunConfig& cfg_;
    std::vector<CheckReport> reports_;
};

void add_pair_params(CheckReport& r, const ParamPair& p) {
    static const char* names[] = {"u1", "u2", "u3", "v1", "v2", "v3"};
    const auto vals = p.values();
    for (std::size_t i = 0; i < 6; ++i) r.add_param(names[i], vals[i]);
}

void add_weight_params(CheckReport& r, const Weight& w) {
    r.add_param("ell", w.ell);
    r.add_param("b", w.b);
}

std::vector<ParamPair> pairs_for(const RunConfig& cfg) {
    if (cfg.explicit_params) return {*cfg.explicit_params};
    return sample_params(cfg.seed, cfg.samples, guard_degree(cfg));
}

std::vector<Weight> weights_for(const RunConfig& cfg) {
    if (cfg.explicit_params) return {cfg.explicit_params->u.weight(), cfg.explicit_params->v.weight()};
    return sample_weights(cfg.seed, kSaltAlgebra, cfg.samples, verma_defined);
}

std::vector<CheckReport> algebra_suite(const RunConfig& cfg) {
    Collector c(cfg);
    const int d = cfg.max_degree;
    const auto weights = weights_for(cfg);
    for (const auto& w : weights) {
        c.add("relations", [&] { return check_relations(build_generators(1, w), d); });
    }
    for (auto kind : {Chirality::Chiral, Chirality::Antichiral}) {
        c.add("relations/" + to_string(kind), [&] { return check_relations(fundamental_rep(kind)); });
    }
    for (const auto& w : weights) {
        c.add("casimir", [&] {
            CheckReport r;
            r.check_name = "casimir";
            r.max_degree = d;
            add_weight_params(r, w);
            const auto g = build_generators(1, w);
            for (int order : {2, 3}) {
                const Operator cas = casimir(g, order);
                for (Gen x : kAllGens) {
                    r.absorb(equal_on_degree(graded_commutator(cas, g[x]), ops::c(0), d, 2,
                                             "[C" + std::to_string(order) + ", " + to_string(x) + "]"));
                }
            }
            const Rational value = w.ell * w.ell - w.b * w.b;
            CheckReport eig;
            eig.check_name = "C2 on the lowest weight";
            eig.expect_equal("1", casimir(g, 2).apply(SuperPolynomial(1)), SuperPolynomial(value));
            r.absorb(eig);
            return r;
        });
    }
    for (const auto& w : weights) {
        c.add("verma", [&] {
            CheckReport r;
            r.check_name = "verma";
            r.max_degree = 4;
            add_weight_params(r, w);
            const auto g = build_generators(1, w);
            for (auto kind : {VermaKind::A, VermaKind::B, VermaKind::V, VermaKind::W}) {
                for (int k = (kind == VermaKind::B ? 1 : 0); k <= 4; ++k) {
                    const std::string label = to_string(kind) + "_" + std::to_string(k);
                    try {
                        r.expect_equal(label, verma_vector(w, kind, k), verma_by_raising(g, kind, k));
                    } catch (const SingularWeight&) {
                        r.notes.push_back("skipped " + label + ": closed form undefined at this weight");
                    }
                }
            }
            return r;
        });
    }
    for (int n : {1, 2}) {
        for (auto kind : {Chirality::Chiral, Chirality::Antichiral}) {
            c.add("finite_subspace", [&] { return check_finite_subspace(n, kind); });
        }
    }
    c.add("finite_subspace/mutation", [&] {
        CheckReport r;
        r.check_name = "finite_subspace/mutation";
        const auto chiral = check_finite_subspace(1, Chirality::Chiral, Rational(1, 2));
        const auto anti = check_finite_subspace(1, Chirality::Antichiral, Rational(-1, 2));
        r.expect("chiral n=1 with b=1/2", chiral.status == Status::Fail, "closure not broken");
        r.expect("antichiral n=1 with b=-1/2", anti.status == Status::Fail, "closure not broken");
        return r;
    });
    return c.take();
}

std::vector<SpectralTriple> triples_for(const RunConfig& cfg) {
    if (cfg.explicit_params) return {cfg.explicit_params->u, cfg.explicit_params->v};
    RationalSampler s(derived_stream(cfg.seed, kSaltLax)());
    std::vector<SpectralTriple> out;
    for (int i = 0; i < cfg.samples; ++i) {
        SpectralTriple t;
        t.u1 = s.next();
        t.u2 = s.next();
        t.u3 = s.next();
        out.push_back(t);
    }
    return out;
}

std::vector<CheckReport> lax_suite(const RunConfig& cfg) {
    Collector c(cfg);
    const int d = cfg.max_degree;
    const auto triples = triples_for(cfg);
    RationalSampler lambdas(derived_stream(cfg.seed, kSaltLax + 100)());
    for (const auto& t : triples) {
        auto named = [&](CheckReport r) {
            r.max_degree = d;
            r.add_param("u1", t.u1);
            r.add_param("u2", t.u2);
            r.add_param("u3", t.u3);
            return r;
        };
        const auto printed = build_lax(1, t);
        c.add("lax/factorized", [&] {
            return named(equal_entries(build_lax_factorized(1, t), printed, d, 2, "lax/factorized"));
        });
        c.add("lax/generators", [&] {
            return named(equal_entries(build_lax(1, t, Chirality::Chiral, LaxForm::Generators), printed, d, 2,
                                       "lax/generators"));
        });
        c.add("lax/tensor", [&] {
            return named(
                equal_entries(build_lax(1, t, Chirality::Chiral, LaxForm::Tensor), printed, d, 2, "lax/tensor"));
        });
        c.add("lax/antichiral-tensor", [&] {
            return named(equal_entries(build_lax(1, t, Chirality::Antichiral, LaxForm::Tensor),
                                       build_lax(1, t, Chirality::Antichiral), d, 2, "lax/antichiral-tensor"));
        });
        const Rational lambda = lambdas.next();
        c.add("invariance", [&] {
            auto r = check_invariance(1, t, lambda, d);
            r.check_name = "invariance";
            return r;
        });
    }
    return c.take();
}

std::vector<CheckReport> rll_suite(const RunConfig& cfg) {
    Collector c(cfg);
    struct Case {
        Weight w;
        Rational u;
        Rational v;
    };
    std::vector<Case> cases;
    if (cfg.explicit_params) {
        const auto& p = *cfg.explicit_params;
        cases.push_back({p.u.weight(), p.u.u(), p.v.u()});
        cases.push_back({p.v.weight(), p.v.u(), p.u.u()});
    } else {
        RationalSampler s(derived_stream(cfg.seed, kSaltRll)());
        for (int i = 0; i < cfg.samples; ++i) {
            Case k;
            k.w.ell = s.next();
            k.w.b = s.next();
            k.u = s.next();
            k.v = s.next();
            cases.push_back(k);
        }
    }
    for (const auto& k : cases) {
        for (auto kind : {Chirality::Chiral, Chirality::Antichiral}) {
            c.add("rll/" + to_string(kind), [&] { return check_rll(k.w, k.u, k.v, cfg.max_degree, kind); });
        }
    }
    return c.take();
}

std::vector<CheckReport> defining_suite(const RunConfig& cfg) {
    Collector c(cfg);
    for (const auto& p : pairs_for(cfg)) {
        for (int k = 1; k <= 3; ++k) {
            c.add("defining/R" + std::to_string(k), [&] { return check_defining(k, p, cfg.max_degree); });
        }
        for (int k = 1; k <= 3; ++k) {
            c.add("intertwining/R" + std::to_string(k), [&] { return check_intertwining(k, p, cfg.max_degree); });
        }
    }
    return c.take();
}

std::vector<CheckReport> lemmas_suite(const RunConfig& cfg) {
    Collector c(cfg);
    for (const auto& p : pairs_for(cfg)) {
        for (int k = 1; k <= 3; ++k) {
            c.add("lemmas/R" + std::to_string(k), [&] { return check_lemma_system(k, p, cfg.max_degree); });
        }
    }
    return c.take();
}

std::vector<CheckReport> recurrences_suite(const RunConfig& cfg) {
    Collector c(cfg);
    for (const auto& p : pairs_for(cfg)) {
        c.add("recurrences", [&] { return check_recurrences(p, std::max(cfg.max_degree, 4)); });
    }
    return c.take();
}

std::vector<CheckReport> factorization_suite(const RunConfig& cfg) {
    Collector c(cfg);
    const int d = cfg.max_degree;
    for (const auto& p : pairs_for(cfg)) {
        c.add("factorization", [&] { return check_factorization(p, d); });
        c.add("rhat_intertwining", [&] { return check_rhat_intertwining(p, d); });
        for (const auto* t : {&p.u, &p.v}) {
            c.add("rhat_identity", [&] { return check_rhat_identity(*t, d); });
        }
    }
    return c.take();
}

std::vector<CheckReport> spectrum_suite(const RunConfig& cfg) {
    Collector c(cfg);
    const int max_n = cfg.max_degree;
    for (const auto& p : pairs_for(cfg)) {
        for (int n = 0; n <= max_n; ++n) {
            for (auto which : {RWhich::R1, RWhich::R2, RWhich::R3}) {
                for (auto sector : {Sector::Even, Sector::Odd}) {
                    c.add("spectrum", [&] { return check_sector(which, p, sector, n); });
                }
            }
            c.add("composite", [&] {
                auto r = composite_spectrum(p, n).report;
                if (r.params.empty()) add_pair_params(r, p);
                return r;
            });
        }
    }
    c.add("conjugator_oracles", [&] { return check_conjugator_oracles(max_n); });
    return c.take();
}

std::vector<CheckReport> ybe_suite(const RunConfig& cfg) {
    Collector c(cfg);
    std::vector<YbeConfig> configs;
    if (cfg.explicit_params) {
        const auto& p = *cfg.explicit_params;
        auto w3 = sample_weights(cfg.seed, kSaltYbe, 1).front();
        YbeConfig y{p.u.weight(), p.v.weight(), w3, p.u.u(), p.v.u()};
        const auto g = ybe_guard(y, cfg.max_degree);
        if (!g.empty()) throw ConfigError("explicit parameters give a singular three-site configuration: " + g);
        configs.push_back(y);
    } else {
        configs = sample_ybe(cfg.seed, cfg.samples, cfg.max_degree);
    }
    for (const auto& y : configs) {
        c.add("ybe", [&] { return check_ybe(y.w1, y.w2, y.w3, y.u, y.v, cfg.max_degree); });
    }
    return c.take();
}

Json report_json(const CheckReport& r, const std::string& suite, bool timing) {
    Json j;
    j["suite"] = suite;
    j["check_name"] = r.check_name;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = params;
    j["max_degree"] = r.max_degree;
    j["status"] = to_string(r.status);
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"residual", f.residual}});
    }
    j["failures"] = failures;
    j["failure_count"] = r.failure_count;
    if (!r.items.empty()) {
        Json items = Json::array();
        for (const auto& it : r.items) items.push_back({{"name", it.name}, {"status", to_string(it.status)}});
        j["items"] = items;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (r.error) j["error"] = *r.error;
    if (timing && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j;
}

std::string entry_label(int i, int j) {
    return std::string(i == 0 ? "+" : "-") + (j == 0 ? "+" : "-");
}

}  // namespace

std::string to_string(Command c) {
    switch (c) {
        case Command::Algebra: return "check-algebra";
        case Command::Lax: return "check-lax";
        case Command::Rll: return "check-rll";
        case Command::Defining: return "check-defining";
        case Command::Lemmas: return "check-lemmas";
        case Command::Recurrences: return "check-recurrences";
        case Command::Factorization: return "check-factorization";
        case Command::Ybe: return "check-ybe";
        case Command::Spectrum: return "spectrum";
        case Command::All: return "all";
    }
    return "?";
}

std::optional<Command> parse_command(const std::string& name) {
    for (auto c : {Command::Algebra, Command::Lax, Command::Rll, Command::Defining, Command::Lemmas,
                   Command::Recurrences, Command::Factorization, Command::Ybe, Command::Spectrum, Command::All}) {
        if (to_string(c) == name) return c;
    }
    return std::nullopt;
}

ParamPair parse_params(const std::string& text) {
    const auto v = parse_list(text, 6, "--params");
    return {{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
}

ParamPair parse_weights(const std::string& text) {
    const auto v = parse_list(text, 6, "--weights");
    return ParamPair::from_weights(v[4], {v[0], v[1]}, v[5], {v[2], v[3]});
}

RationalSampler::RationalSampler(std::uint64_t seed) : rng_(seed) {}

Rational RationalSampler::next() {
    const int num = static_cast<int>(rng_() % 41) - 20;
    const int den = static_cast<int>(rng_() % 8) + 1;
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::vector<ParamPair> sample_params(std::uint64_t seed, int samples, int max_degree) {
    RationalSampler s(seed);
    std::vector<ParamPair> out;
    for (int i = 0; i < samples; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < kMaxResamples && !found; ++attempt) {
            ParamPair p;
            p.u.u1 = s.next();
            p.u.u2 = s.next();
            p.u.u3 = s.next();
            p.v.u1 = s.next();
            p.v.u2 = s.next();
            p.v.u3 = s.next();
            if (guard_violation(p, max_degree).empty()) {
                out.push_back(p);
                found = true;
            }
        }
        if (!found) throw GuardExhausted("no regular parameter pair after " + std::to_string(kMaxResamples) + " draws");
    }
    return out;
}

std::vector<Weight> sample_weights(std::uint64_t seed, std::uint64_t salt, int samples,
                                   const std::function<bool(const Weight&)>& ok) {
    RationalSampler s(derived_stream(seed, salt)());
    std::vector<Weight> out;
    for (int i = 0; i < samples; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < kMaxResamples && !found; ++attempt) {
            Weight w;
            w.ell = s.next();
            w.b = s.next();
            if (!ok || ok(w)) {
                out.push_back(w);
                found = true;
            }
        }
        if (!found) throw GuardExhausted("no admissible weight after " + std::to_string(kMaxResamples) + " draws");
    }
    return out;
}

std::vector<YbeConfig> sample_ybe(std::uint64_t seed, int samples, int max_degree) {
    RationalSampler s(derived_stream(seed, kSaltYbe)());
    std::vector<YbeConfig> out;
    for (int i = 0; i < samples; ++i) {
        bool found = false;
        for (int attempt = 0; attempt < kMaxResamples && !found; ++attempt) {
            YbeConfig y;
            y.w1 = {s.next(), s.next()};
            y.w2 = {s.next(), s.next()};
            y.w3 = {s.next(), s.next()};
            y.u = s.next();
            y.v = s.next();
            if (ybe_guard(y, max_degree).empty()) {
                out.push_back(y);
                found = true;
            }
        }
        if (!found) throw GuardExhausted("no regular YBE configuration after " + std::to_string(kMaxResamples) + " draws");
    }
    return out;
}

int guard_degree(const RunConfig& cfg) {
    if (cfg.command == Command::Recurrences || cfg.command == Command::All) return std::max(cfg.max_degree, 4);
    return cfg.max_degree;
}

std::vector<CheckReport> run_suite(Command c, const RunConfig& cfg) {
    switch (c) {
        case Command::Algebra: return algebra_suite(cfg);
        case Command::Lax: return lax_suite(cfg);
        case Command::Rll: return rll_suite(cfg);
        case Command::Defining: return defining_suite(cfg);
        case Command::Lemmas: return lemmas_suite(cfg);
        case Command::Recurrences: return recurrences_suite(cfg);
        case Command::Factorization: return factorization_suite(cfg);
        case Command::Ybe: return ybe_suite(cfg);
        case Command::Spectrum: return spectrum_suite(cfg);
        case Command::All: break;
    }
    throw std::invalid_argument("run_suite: 'all' is not a single suite");
}

std::vector<SpectrumRow> spectrum_table(const ParamPair& p, int max_n) {
    std::vector<SpectrumRow> rows;
    for (int n = 0; n <= max_n; ++n) {
        for (auto which : {RWhich::R1, RWhich::R2, RWhich::R3, RWhich::RHat}) {
            for (auto sector : {Sector::Even, Sector::Odd}) {
                const auto computed = sector_action(which, p, sector, n);
                const auto formula = printed_sector_action(which, p, sector, n);
                for (int j = 0; j < computed.dim; ++j) {
                    for (int i = 0; i < computed.dim; ++i) {
                        SpectrumRow row;
                        row.n = n;
                        row.which = which;
                        row.sector = sector;
                        row.entry = entry_label(i, j);
                        row.computed = computed.entries[i][j];
                        row.formula = formula.entries[i][j];
                        if (which == RWhich::RHat && sector == Sector::Odd && i == 1 && j == 1) {
                            row.note = "label-typo-note: the printed image of Psi-_n is labelled Psi+_n";
                        } else if (which == RWhich::RHat && sector == Sector::Even && i == 1 && j == 0 &&
                                   computed.dim == 2) {
                            row.note = "label-typo-note: the printed second term of the Phi+_n image is labelled Phi+_n";
                        }
                        rows.push_back(row);
                    }
                }
            }
        }
    }
    return rows;
}

std::string to_json_line(const CheckReport& r, const std::string& suite, bool timing) {
    return report_json(r, suite, timing).dump();
}

std::string to_json_line(const SpectrumRow& row) {
    Json j;
    j["table"] = "spectrum";
    j["n"] = row.n;
    j["operator"] = to_string(row.which);
    j["sector"] = to_string(row.sector);
    j["entry"] = row.entry;
    j["computed"] = render_rational(row.computed);
    j["formula"] = render_rational(row.formula);
    j["match"] = row.computed == row.formula;
    if (!row.note.empty()) j["note"] = row.note;
    return j.dump();
}

std::string to_text(const CheckReport& r, const std::string& suite) {
    std::ostringstream os;
    os << (r.status == Status::Pass ? "PASS " : r.status == Status::Fail ? "FAIL " : "ERROR") << "  " << suite
       << "  " << r.check_name << "  D=" << r.max_degree;
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    if (r.elapsed_ms) os << "  (" << static_cast<long>(*r.elapsed_ms) << " ms)";
    for (const auto& f : r.failures) {
        os << "\n    at " << f.input << ": lhs " << f.lhs << " | rhs " << f.rhs << " | residual " << f.residual;
    }
    if (r.failure_count > r.failures.size()) {
        os << "\n    ... " << (r.failure_count - r.failures.size()) << " more failures";
    }
    for (const auto& n : r.notes) os << "\n    note: " << n;
    if (r.error) os << "\n    error: " << *r.error;
    return os.str();
}

std::string to_text(const SpectrumRow& row) {
    std::ostringstream os;
    os << "n=" << row.n << "  " << to_string(row.which) << "  " << to_string(row.sector) << "  [" << row.entry
       << "]  computed " << render_rational(row.computed) << "  formula " << render_rational(row.formula) << "  "
       << (row.computed == row.formula ? "ok" : "MISMATCH");
    if (!row.note.empty()) os << "  (" << row.note << ")";
    return os.str();
}

int run(const RunConfig& cfg, std::ostream& out_default, std::ostream& err) {
    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            err << "error: cannot open " << cfg.output << " for writing\n";
            return 2;
        }
    }
    std::ostream& out = cfg.output.empty() ? out_default : file;
    const bool json = cfg.format == Format::Json;

    if (cfg.max_degree < 0 || cfg.samples < 0) {
        err << "error: --max-degree and --samples must be nonnegative\n";
        return 2;
    }
    if (cfg.explicit_params) {
        const auto g = guard_violation(*cfg.explicit_params, guard_degree(cfg));
        if (!g.empty()) {
            err << "error: parameters fail the regularity guard: " << g << "\n";
            return 2;
        }
    }

    std::vector<Command> commands;
    if (cfg.command == Command::All) {
        commands.assign(kSuiteOrder.begin(), kSuiteOrder.end());
        if (cfg.with_ybe) commands.push_back(Command::Ybe);
    } else {
        commands.push_back(cfg.command);
    }

    std::size_t checks = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;
    try {
        if (cfg.command == Command::Spectrum) {
            for (const auto& p : pairs_for(cfg)) {
                for (const auto& row : spectrum_table(p, cfg.max_degree)) {
                    out << (json ? to_json_line(row) : to_text(row)) << '\n';
                    if (row.computed != row.formula) ++failed;
                }
            }
        }
        for (auto c : commands) {
            const std::string suite = to_string(c);
            for (const auto& r : run_suite(c, cfg)) {
                ++checks;
                if (r.status == Status::Pass) ++passed;
                if (r.status == Status::Fail) ++failed;
                if (r.status == Status::Error) ++errors;
                out << (json ? to_json_line(r, suite, cfg.timing) : to_text(r, suite)) << '\n';
                out.flush();
            }
        }
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExhausted& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }

    const int code = errors > 0 ? 3 : failed > 0 ? 1 : 0;
    std::vector<std::string> skipped;
    if (cfg.command == Command::All && !cfg.with_ybe) skipped.push_back(to_string(Command::Ybe));
    if (json) {
        Json s;
        s["summary"] = {{"command", to_string(cfg.command)},
                        {"seed", cfg.seed},
                        {"max_degree", cfg.max_degree},
                        {"checks", checks},
                        {"passed", passed},
                        {"failed", failed},
                        {"errors", errors},
                        {"skipped", skipped},
                        {"exit_code", code}};
        out << s.dump() << '\n';
    } else {
        out << "summary: " << passed << "/" << checks << " passed, " << failed << " failed, " << errors
            << " errors";
        for (const auto& s : skipped) out << "; skipped " << s << " (not requested)";
        out << '\n';
    }
    return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks of the sl(2|1) R-operator construction"};
    std::string command = "all";
    std::string params;
    std::string weights;
    std::string format = "json";
    std::optional<std::uint64_t> seed;
    RunConfig cfg;

    app.add_option("--command", command, "check-algebra | check-lax | check-rll | check-defining | check-lemmas | "
                                         "check-recurrences | check-factorization | check-ybe | spectrum | all");
    app.add_option("--max-degree", cfg.max_degree, "degree bound D")->check(CLI::NonNegativeNumber);
    app.add_option("--seed", seed, "64-bit seed (default: YBSL21_SEED, then 1)");
    app.add_option("--samples", cfg.samples, "number of sampled parameter sets")->check(CLI::NonNegativeNumber);
    auto* p_opt = app.add_option("--params", params, "u1,u2,u3,v1,v2,v3 as p or p/q");
    app.add_option("--weights", weights, "l1,b1,l2,b2,u,v as p or p/q")->excludes(p_opt);
    app.add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--out", cfg.output, "output file (default: stdout)");
    app.add_flag("--with-ybe", cfg.with_ybe, "include check-ybe in 'all'");
    app.add_flag("--timing", cfg.timing, "report elapsed_ms per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        auto c = parse_command(command);
        if (!c) throw ConfigError("unknown command '" + command + "'");
        cfg.command = *c;
        cfg.format = format == "text" ? Format::Text : Format::Json;
        if (seed) {
            cfg.seed = *seed;
        } else if (const char* env = std::getenv("YBSL21_SEED"); env != nullptr && *env != '\0') {
            std::uint64_t v = 0;
            const char* end = env + std::char_traits<char>::length(env);
            auto [ptr, ec] = std::from_chars(env, end, v);
            if (ec != std::errc() || ptr != end) throw ConfigError(std::string("YBSL21_SEED is not an integer: ") + env);
            cfg.seed = v;
        }
        if (!params.empty()) cfg.explicit_params = parse_params(params);
        if (!weights.empty()) cfg.explicit_params = parse_weights(weights);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return run(cfg, out, err);
}

}  // namespace ybsl21::cli
