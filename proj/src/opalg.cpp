#include "ybsl21/opalg.hpp"

#include <mutex>
#include <unordered_map>
#include <variant>

namespace ybsl21 {

// ------------------------------------------------------------- Pochhammer

Rational pochhammer(const Rational& x, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    Rational out = 1;
    for (int j = 0; j < n; ++j) out *= x + j;
    return out;
}

Rational gamma_shift_ratio(const Rational& x, int m) {
    if (m >= 0) {
        // Gamma(x+m)/Gamma(x) = (x)_m; a pole of Gamma(x) would make this 0,
        // only reachable for x a nonpositive integer.
        if (x <= 0 && x.get_den() == 1) {
            throw SingularParameters("Gamma pole at " + render_rational(x));
        }
        return pochhammer(x, m);
    }
    Rational denom = pochhammer(x + m, -m);
    if (denom == 0) throw SingularParameters("Gamma ratio pole at " + render_rational(x + m));
    return Rational(1) / denom;
}

Rational PochhammerSpec::evaluate(int n) const {
    Rational num = 1;
    Rational den = 1;
    for (const auto& a : numerator_offsets) num *= pochhammer(a, n);
    for (const auto& b : denominator_offsets) den *= pochhammer(b, n);
    if (den == 0) {
        throw SingularParameters("Pochhammer denominator vanishes at degree " + std::to_string(n));
    }
    return num / den;
}

bool PochhammerSpec::regular_up_to(int max_n) const {
    for (const auto& b : denominator_offsets) {
        for (int j = 0; j < max_n; ++j) {
            if (b + j == 0) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------------ nodes

namespace {

struct ScalarNode { Rational c; };
struct MulNode { SuperPolynomial p; int parity; };
struct EvenDerivNode { int site; };
struct OddDerivNode { OddVar v; };
struct DiagonalNode { int site; PochhammerSpec spec; };
struct PermNode { std::array<int, kMaxSites> target; };
struct SumNode { std::vector<Operator> terms; };
struct ComposeNode { std::vector<Operator> factors; };
struct ExpNode { Operator generator; };
struct MemoCache {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, SuperPolynomial> images;
};
struct MemoNode {
    Operator inner;
    std::shared_ptr<MemoCache> cache;
};

}  // namespace

struct Operator::Node {
    std::variant<ScalarNode, MulNode, EvenDerivNode, OddDerivNode, DiagonalNode, PermNode,
                 SumNode, ComposeNode, ExpNode, MemoNode>
        kind;
    std::optional<int> parity;

    template <typename T>
    Node(T k, std::optional<int> par) : kind(std::move(k)), parity(par) {}
};

namespace {

void check_site(int site) {
    if (site < 1 || site > kMaxSites) throw std::out_of_range("site index must be 1..3");
}

SuperPolynomial permute_monomial(const Monomial& m, const std::array<int, kMaxSites>& target) {
    std::array<int, kMaxSites> deg{};
    for (int s = 1; s <= kMaxSites; ++s) deg[target[s - 1] - 1] = m.z_degree(s);
    // new bit indices in the original canonical order; sign = parity of inversions
    std::vector<int> mapped;
    for (int b = 0; b < 2 * kMaxSites; ++b) {
        if ((m.odd().bits() >> b) & 1U) {
            OddVar v = OddVar::from_bit(b);
            mapped.push_back(OddVar{target[v.site - 1], v.bar}.bit());
        }
    }
    int inversions = 0;
    unsigned bits = 0;
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        bits |= 1U << mapped[i];
        for (std::size_t j = i + 1; j < mapped.size(); ++j) {
            if (mapped[i] > mapped[j]) ++inversions;
        }
    }
    return SuperPolynomial(Monomial(deg, OddMask(static_cast<std::uint8_t>(bits))),
                           (inversions & 1) ? -1 : 1);
}

SuperPolynomial apply_node(const Operator::Node& node, const SuperPolynomial& p);

template <typename F>
SuperPolynomial termwise(const SuperPolynomial& p, F&& per_monomial) {
    SuperPolynomial out;
    for (const auto& [m, c] : p.terms()) per_monomial(m, c, out);
    return out;
}

int exp_budget(const SuperPolynomial& p) {
    return p.max_total_z_degree() + 5;
}

}  // namespace

// Operator::apply forwards into the node visitor below.
SuperPolynomial Operator::apply(const SuperPolynomial& p) const {
    return apply_node(*node_, p);
}

namespace {

SuperPolynomial apply_node(const Operator::Node& node, const SuperPolynomial& p) {
    return std::visit(
        [&p](const auto& k) -> SuperPolynomial {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ScalarNode>) {
                return k.c * p;
            } else if constexpr (std::is_same_v<K, MulNode>) {
                return k.p * p;
            } else if constexpr (std::is_same_v<K, EvenDerivNode>) {
                return deriv_even(k.site, p);
            } else if constexpr (std::is_same_v<K, OddDerivNode>) {
                return deriv_odd(k.v, p);
            } else if constexpr (std::is_same_v<K, DiagonalNode>) {
                return termwise(p, [&k](const Monomial& m, const Rational& c, SuperPolynomial& out) {
                    out.add_term(m, c * k.spec.evaluate(m.z_degree(k.site)));
                });
            } else if constexpr (std::is_same_v<K, PermNode>) {
                return termwise(p, [&k](const Monomial& m, const Rational& c, SuperPolynomial& out) {
                    SuperPolynomial image = permute_monomial(m, k.target);
                    for (const auto& [mm, cc] : image.terms()) out.add_term(mm, c * cc);
                });
            } else if constexpr (std::is_same_v<K, SumNode>) {
                SuperPolynomial out;
                for (const auto& t : k.terms) out += t.apply(p);
                return out;
            } else if constexpr (std::is_same_v<K, ComposeNode>) {
                SuperPolynomial cur = p;
                for (auto it = k.factors.rbegin(); it != k.factors.rend(); ++it) {
                    if (cur.is_zero()) break;
                    cur = it->apply(cur);
                }
                return cur;
            } else if constexpr (std::is_same_v<K, ExpNode>) {
                SuperPolynomial out = p;
                SuperPolynomial term = p;
                const int budget = exp_budget(p);
                for (int j = 1;; ++j) {
                    term = k.generator.apply(term);
                    if (term.is_zero()) break;
                    if (j > budget) {
                        throw NonTerminatingExp("exponential series did not terminate within " +
                                                std::to_string(budget) + " terms");
                    }
                    term *= Rational(1, j);
                    out += term;
                }
                return out;
            } else {
                static_assert(std::is_same_v<K, MemoNode>);
                SuperPolynomial out;
                for (const auto& [m, c] : p.terms()) {
                    SuperPolynomial image;
                    bool hit = false;
                    {
                        std::lock_guard<std::mutex> lock(k.cache->mutex);
                        auto it = k.cache->images.find(m.key());
                        if (it != k.cache->images.end()) {
                            image = it->second;
                            hit = true;
                        }
                    }
                    if (!hit) {
                        image = k.inner.apply(SuperPolynomial(m));
                        std::lock_guard<std::mutex> lock(k.cache->mutex);
                        k.cache->images.emplace(m.key(), image);
                    }
                    for (const auto& [mm, cc] : image.terms()) out.add_term(mm, c * cc);
                }
                return out;
            }
        },
        node.kind);
}

}  // namespace

// -------------------------------------------------------------- factories

Operator::Operator() : node_(std::make_shared<const Node>(ScalarNode{Rational(1)}, 0)) {}

Operator Operator::scalar(const Rational& c) {
    return Operator(std::make_shared<const Node>(ScalarNode{c}, 0));
}

Operator Operator::mul_by(const SuperPolynomial& p) {
    int par = p.parity();
    std::optional<int> parity = par >= 0 ? std::optional<int>(par) : std::nullopt;
    return Operator(std::make_shared<const Node>(MulNode{p, par}, parity));
}

Operator Operator::even_deriv(int site) {
    check_site(site);
    return Operator(std::make_shared<const Node>(EvenDerivNode{site}, 0));
}

Operator Operator::odd_deriv(OddVar v) {
    check_site(v.site);
    return Operator(std::make_shared<const Node>(OddDerivNode{v}, 1));
}

Operator Operator::degree_diagonal(int site, PochhammerSpec spec) {
    check_site(site);
    return Operator(std::make_shared<const Node>(DiagonalNode{site, std::move(spec)}, 0));
}

Operator Operator::site_permutation(std::array<int, kMaxSites> target) {
    std::array<bool, kMaxSites> seen{};
    for (int t : target) {
        check_site(t);
        if (seen[t - 1]) throw std::invalid_argument("site_permutation: not a permutation");
        seen[t - 1] = true;
    }
    return Operator(std::make_shared<const Node>(PermNode{target}, 0));
}

Operator Operator::sum(std::vector<Operator> terms) {
    std::vector<Operator> flat;
    std::optional<int> parity;
    bool first = true;
    bool definite = true;
    for (auto& t : terms) {
        if (const auto* s = std::get_if<SumNode>(&t.node_->kind)) {
            flat.insert(flat.end(), s->terms.begin(), s->terms.end());
        } else {
            flat.push_back(t);
        }
        auto p = t.parity();
        if (!p) {
            definite = false;
        } else if (first) {
            parity = p;
        } else if (parity != p) {
            definite = false;
        }
        first = false;
    }
    if (flat.empty()) return scalar(0);
    if (flat.size() == 1) return flat.front();
    return Operator(std::make_shared<const Node>(SumNode{std::move(flat)},
                                                 definite ? parity : std::nullopt));
}

Operator Operator::compose(std::vector<Operator> factors) {
    std::vector<Operator> flat;
    std::optional<int> parity = 0;
    for (auto& f : factors) {
        if (const auto* c = std::get_if<ComposeNode>(&f.node_->kind)) {
            flat.insert(flat.end(), c->factors.begin(), c->factors.end());
        } else {
            flat.push_back(f);
        }
        auto p = f.parity();
        if (!p || !parity) {
            parity = std::nullopt;
        } else {
            parity = (*parity + *p) % 2;
        }
    }
    if (flat.empty()) return identity();
    if (flat.size() == 1) return flat.front();
    return Operator(std::make_shared<const Node>(ComposeNode{std::move(flat)}, parity));
}

Operator Operator::exp_terminating(const Operator& generator) {
    return Operator(std::make_shared<const Node>(ExpNode{generator}, generator.parity()));
}

Operator Operator::memoized(const Operator& inner) {
    return Operator(std::make_shared<const Node>(MemoNode{inner, std::make_shared<MemoCache>()},
                                                 inner.parity()));
}

std::optional<int> Operator::parity() const {
    return node_->parity;
}

Operator operator+(const Operator& a, const Operator& b) {
    return Operator::sum({a, b});
}

Operator operator-(const Operator& a) {
    return Operator::compose({Operator::scalar(-1), a});
}

Operator operator-(const Operator& a, const Operator& b) {
    return Operator::sum({a, -b});
}

Operator operator*(const Operator& a, const Operator& b) {
    return Operator::compose({a, b});
}

Operator operator*(const Rational& c, const Operator& a) {
    return Operator::compose({Operator::scalar(c), a});
}

SuperPolynomial apply(const Operator& a, const SuperPolynomial& p) {
    return a.apply(p);
}

Operator graded_commutator(const Operator& a, const Operator& b) {
    auto pa = a.parity();
    auto pb = b.parity();
    if (!pa || !pb) throw IndefiniteParity("graded_commutator needs parity-homogeneous operands");
    Rational sign = (*pa * *pb) % 2 ? 1 : -1;
    return a * b + sign * (b * a);
}

Operator exp_terminating(const Operator& a) {
    return Operator::exp_terminating(a);
}

CheckReport equal_on_degree(const Operator& a, const Operator& b, int max_degree, int sites,
                            std::string name) {
    CheckReport report;
    report.check_name = std::move(name);
    report.max_degree = max_degree;
    for (const auto& m : enumerate_basis(max_degree, sites)) {
        report.expect_equal(m.render(), a.apply(m), b.apply(m));
    }
    return report;
}

namespace ops {

Operator d(int site) { return Operator::even_deriv(site); }
Operator d_theta(int site) { return Operator::odd_deriv(ybsl21::theta(site)); }
Operator d_thetabar(int site) { return Operator::odd_deriv(ybsl21::thetabar(site)); }
Operator z(int site) { return Operator::mul_by_z(site); }
Operator mul_theta(int site) { return Operator::mul_by_odd(ybsl21::theta(site)); }
Operator mul_thetabar(int site) { return Operator::mul_by_odd(ybsl21::thetabar(site)); }
Operator mul(const SuperPolynomial& p) { return Operator::mul_by(p); }
Operator c(const Rational& value) { return Operator::scalar(value); }
Operator euler(int site) { return z(site) * d(site); }
Operator theta_number(int site) { return mul_theta(site) * d_theta(site); }
Operator thetabar_number(int site) { return mul_thetabar(site) * d_thetabar(site); }

}  // namespace ops

}  // namespace ybsl21
