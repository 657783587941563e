// Acceptance gate: one line per criterion, exact comparisons throughout.

#include "ybsl21/cli.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace ybsl21;
using namespace ybsl21::cli;

namespace {

constexpr std::uint64_t kSeed = 20261016;

struct Tally {
    std::size_t checks = 0;
    std::vector<std::string> problems;

    void add(const CheckReport& r) {
        ++checks;
        if (r.passed()) return;
        std::string line = r.check_name + " [" + to_string(r.status) + "]";
        if (r.error) line += " " + *r.error;
        if (!r.failures.empty()) line += " at " + r.failures.front().input;
        problems.push_back(line);
    }
    void add(const std::vector<CheckReport>& rs) {
        for (const auto& r : rs) add(r);
    }
    void require(bool ok, const std::string& what) {
        ++checks;
        if (!ok) problems.push_back(what);
    }
};

RunConfig config(Command c, int max_degree, int samples) {
    RunConfig cfg;
    cfg.command = c;
    cfg.max_degree = max_degree;
    cfg.samples = samples;
    cfg.seed = kSeed;
    return cfg;
}

int failures = 0;

void criterion(const std::string& id, const std::string& title, double limit_s, const std::function<void(Tally&)>& body) {
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(t);
    } catch (const std::exception& e) {
        t.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= limit_s;
    const bool ok = t.problems.empty() && in_time && t.checks > 0;
    if (!ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, limit_s);
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << "  " << title << "  (" << t.checks << " checks, "
              << timing << ")\n";
    for (std::size_t i = 0; i < t.problems.size() && i < 5; ++i) std::cout << "        " << t.problems[i] << "\n";
    if (!in_time) std::cout << "        over the time limit\n";
    std::cout.flush();
}

}  // namespace

int main() {
    const auto weights = sample_weights(kSeed, 1, 3);
    const auto pairs = sample_params(kSeed, 3, 4);

    criterion("1", "graded relations at D=3, 3 weights and both 3-dim representations", 5, [&](Tally& t) {
        for (const auto& w : weights) t.add(check_relations(build_generators(1, w), 3));
        t.add(check_relations(fundamental_rep(Chirality::Chiral)));
        t.add(check_relations(fundamental_rep(Chirality::Antichiral)));
    });

    criterion("2", "Casimirs commute with all generators at D=3; C2 = ell^2 - b^2 on 1", 5, [&](Tally& t) {
        for (const auto& w : weights) {
            const auto g = build_generators(1, w);
            for (int order : {2, 3}) {
                const Operator c = casimir(g, order);
                for (Gen x : kAllGens) t.add(equal_on_degree(graded_commutator(c, g[x]), ops::c(0), 3));
            }
            t.require(casimir(g, 2).apply(SuperPolynomial(1)) == SuperPolynomial(w.ell * w.ell - w.b * w.b),
                      "C2 eigenvalue");
        }
    });

    criterion("3", "Verma closed forms equal iterated raising, k <= 4", 2, [&](Tally& t) {
        const auto ws = sample_weights(kSeed, 11, 3, [](const Weight& w) {
            try {
                for (auto kind : {VermaKind::A, VermaKind::B, VermaKind::V, VermaKind::W}) {
                    for (int k = (kind == VermaKind::B ? 1 : 0); k <= 4; ++k) (void)verma_vector(w, kind, k);
                }
                return true;
            } catch (const SingularWeight&) {
                return false;
            }
        });
        for (const auto& w : ws) {
            const auto g = build_generators(1, w);
            for (auto kind : {VermaKind::A, VermaKind::B, VermaKind::V, VermaKind::W}) {
                for (int k = (kind == VermaKind::B ? 1 : 0); k <= 4; ++k) {
                    t.require(verma_vector(w, kind, k) == verma_by_raising(g, kind, k),
                              to_string(kind) + "_" + std::to_string(k));
                }
            }
        }
    });

    criterion("4", "finite subspaces closed (n=1,2), broken by the b mutation", 2, [&](Tally& t) {
        for (int n : {1, 2}) {
            t.add(check_finite_subspace(n, Chirality::Chiral));
            t.add(check_finite_subspace(n, Chirality::Antichiral));
        }
        t.require(check_finite_subspace(1, Chirality::Chiral, Rational(1, 2)).status == Status::Fail,
                  "chiral mutation not detected");
        t.require(check_finite_subspace(1, Chirality::Antichiral, Rational(-1, 2)).status == Status::Fail,
                  "antichiral mutation not detected");
    });

    criterion("5", "Lax: factorized form at D=4, tensor form, invariance at D=3", 10, [&](Tally& t) {
        for (const auto& p : pairs) {
            const auto& tr = p.u;
            const auto printed = build_lax(1, tr);
            t.add(equal_entries(build_lax_factorized(1, tr), printed, 4, 2, "factorized"));
            t.add(equal_entries(build_lax(1, tr, Chirality::Chiral, LaxForm::Tensor), printed, 3, 2, "tensor"));
            t.add(equal_entries(build_lax(1, tr, Chirality::Antichiral, LaxForm::Tensor),
                                build_lax(1, tr, Chirality::Antichiral), 3, 2, "antichiral tensor"));
            t.add(check_invariance(1, tr, p.v.u1, 3));
        }
    });

    criterion("6", "RLL at D=3, chiral and antichiral, 3 seeded (w, u, v)", 30,
              [&](Tally& t) { t.add(run_suite(Command::Rll, config(Command::Rll, 3, 3))); });

    criterion("7", "defining equations at D=2 (3 pairs), lemma systems at D=3", 60, [&](Tally& t) {
        for (const auto& p : pairs) {
            for (int k = 1; k <= 3; ++k) t.add(check_defining(k, p, 2));
            for (int k = 1; k <= 3; ++k) t.add(check_lemma_system(k, p, 3));
        }
    });

    criterion("8", "R3 recurrences and R2 coefficient relations, n <= 4, 3 pairs", 2, [&](Tally& t) {
        for (const auto& p : pairs) {
            auto r = check_recurrences(p, 4);
            t.add(r);
            t.require(r.items.size() == 9, "expected five R3 and four R2 relations");
        }
    });

    criterion("9", "R-check = R1 R2 R3 exchanges at D=2 (3 pairs); R-check(u;u) = 1 at D=3", 60, [&](Tally& t) {
        for (const auto& p : pairs) {
            t.add(check_factorization(p, 2));
            t.add(check_rhat_identity(p.u, 3));
        }
    });

    criterion("10", "sector spectra, composite and conjugator oracles for n <= 3", 10, [&](Tally& t) {
        t.add(run_suite(Command::Spectrum, config(Command::Spectrum, 3, 3)));
        const auto rows = spectrum_table(pairs.front(), 3);
        for (const auto& row : rows) t.require(row.computed == row.formula, "table row " + row.entry);
    });

    criterion("11", "Yang-Baxter relation up to a scalar at D=1, 2 configurations", 120, [&](Tally& t) {
        for (const auto& y : sample_ybe(kSeed, 2, 1)) t.add(check_ybe(y.w1, y.w2, y.w3, y.u, y.v, 1));
    });

    criterion("11x", "extended: Yang-Baxter relation at D=2, 2 configurations", 600, [&](Tally& t) {
        for (const auto& y : sample_ybe(kSeed, 2, 2)) t.add(check_ybe(y.w1, y.w2, y.w3, y.u, y.v, 2));
    });

    criterion("12", "two full-suite runs with the same seed give byte-identical JSON", 120, [&](Tally& t) {
        auto once = [] {
            std::ostringstream out;
            std::ostringstream err;
            RunConfig cfg = config(Command::All, 3, 3);
            const int code = run(cfg, out, err);
            return std::make_pair(code, out.str());
        };
        const auto a = once();
        const auto b = once();
        t.require(a.first == 0, "full suite exit code " + std::to_string(a.first));
        t.require(!a.second.empty(), "empty output");
        t.require(a.second == b.second, "outputs differ");
    });

    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
