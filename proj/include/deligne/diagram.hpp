#ifndef DELIGNE_DIAGRAM_HPP
#define DELIGNE_DIAGRAM_HPP

#include <compare>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "deligne/poly.hpp"
#include "deligne/ratfunc.hpp"

namespace deligne {

// Endpoint numbering convention, shared by both diagram families: the
// source object's points come first (0 .. nb-1, left to right), then the
// target's (nb .. nb+nt-1). Edge lists are canonical: every edge stored as
// (min, max) and the list sorted, so equality and map keys are structural.
using EdgeList = std::vector<std::pair<int, int>>;

namespace detail {

EdgeList canonical_edges(EdgeList edges);
// Perfect-matching check on point set 0..n_points-1.
bool is_perfect_matching(const EdgeList& edges, int n_points);

// Glue matching f (on bot+mid points, bottom first) with matching g (on
// mid+top points, mid first): path-follow every through-strand and count
// the closed loops left in the middle.
struct GlueResult {
    EdgeList edges; // on bot+top points
    unsigned loops;
};
GlueResult glue(const EdgeList& f, int bot, int mid, const EdgeList& g, int top);

// Number of closed cycles after joining bottom point i to top point i of an
// endomorphism diagram (n bottom points, n top points).
unsigned closure_loops(const EdgeList& edges, int n);

} // namespace detail

// --- Rep(GL_t): walled diagrams -------------------------------------------

// [r,s] = V^{x r} (x) V*^{x s}
struct GLObject {
    unsigned r = 0, s = 0;
    unsigned points() const { return r + s; }
    bool operator==(const GLObject&) const = default;
    auto operator<=>(const GLObject&) const = default;
    std::string str() const;
};

// Oriented matching between [r1,s1] (bottom) and [r2,s2] (top). Within each
// boundary the V points come first, then the V* points. Every strand joins
// an outgoing point (bottom V or top V*) to an incoming one (top V or
// bottom V*); such diagrams exist iff r1+s2 = r2+s1.
class WalledDiagram {
  public:
    using Object = GLObject;

    WalledDiagram(GLObject src, GLObject dst, EdgeList edges); // validates
    static WalledDiagram identity(GLObject obj);

    const GLObject& src() const { return src_; }
    const GLObject& dst() const { return dst_; }
    const EdgeList& edges() const { return edges_; }

    static std::pair<WalledDiagram, unsigned> compose(const WalledDiagram& g,
                                                      const WalledDiagram& f);
    static WalledDiagram tensor(const WalledDiagram& f, const WalledDiagram& g);
    unsigned closure_loops() const; // requires src == dst

    bool operator==(const WalledDiagram&) const = default;
    auto operator<=>(const WalledDiagram&) const = default;

    std::string str() const; // 1-based "a-b,c-d" edge list

  private:
    GLObject src_, dst_;
    EdgeList edges_;
};

// --- Rep(O_t): Brauer diagrams --------------------------------------------

// [r] = V^{x r}
struct OObject {
    unsigned r = 0;
    unsigned points() const { return r; }
    bool operator==(const OObject&) const = default;
    auto operator<=>(const OObject&) const = default;
    std::string str() const;
};

// Unoriented perfect matching on the r1 bottom + r2 top points.
class BrauerDiagram {
  public:
    using Object = OObject;

    BrauerDiagram(OObject src, OObject dst, EdgeList edges); // validates
    static BrauerDiagram identity(OObject obj);

    const OObject& src() const { return src_; }
    const OObject& dst() const { return dst_; }
    const EdgeList& edges() const { return edges_; }

    static std::pair<BrauerDiagram, unsigned> compose(const BrauerDiagram& g,
                                                      const BrauerDiagram& f);
    static BrauerDiagram tensor(const BrauerDiagram& f, const BrauerDiagram& g);
    unsigned closure_loops() const;

    bool operator==(const BrauerDiagram&) const = default;
    auto operator<=>(const BrauerDiagram&) const = default;

    std::string str() const;

  private:
    OObject src_, dst_;
    EdgeList edges_;
};

// --- Formal linear combinations -------------------------------------------

// Q(t)-linear combination of diagrams sharing one source and one target.
template <class Diag>
class DiagExpr {
  public:
    using Object = typename Diag::Object;

    DiagExpr(Object src, Object dst) : src_(src), dst_(dst) {}
    explicit DiagExpr(const Diag& d, RatFunc c = RatFunc(1))
        : src_(d.src()), dst_(d.dst()) {
        add_term(d, c);
    }

    static DiagExpr identity(Object obj) { return DiagExpr(Diag::identity(obj)); }

    const Object& src() const { return src_; }
    const Object& dst() const { return dst_; }
    const std::map<Diag, RatFunc>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Diag& d, const RatFunc& c);

    DiagExpr& operator+=(const DiagExpr& o);
    DiagExpr& operator-=(const DiagExpr& o);
    DiagExpr& operator*=(const RatFunc& c);
    friend DiagExpr operator+(DiagExpr a, const DiagExpr& b) { return a += b; }
    friend DiagExpr operator-(DiagExpr a, const DiagExpr& b) { return a -= b; }
    friend DiagExpr operator*(DiagExpr a, const RatFunc& c) { return a *= c; }
    friend DiagExpr operator*(const RatFunc& c, DiagExpr a) { return a *= c; }

    bool operator==(const DiagExpr&) const = default;

    std::string str() const;

  private:
    Object src_, dst_;
    std::map<Diag, RatFunc> terms_;
};

using GLElement = DiagExpr<WalledDiagram>;
using OElement = DiagExpr<BrauerDiagram>;

// g after f; every closed loop removed in the gluing contributes a factor t.
template <class Diag>
DiagExpr<Diag> compose(const DiagExpr<Diag>& g, const DiagExpr<Diag>& f);

template <class Diag>
DiagExpr<Diag> tensor(const DiagExpr<Diag>& f, const DiagExpr<Diag>& g);

// Categorical trace of an endomorphism: close top point i onto bottom point
// i and count loops; each diagram contributes coefficient * t^loops.
template <class Diag>
RatFunc closure_trace(const DiagExpr<Diag>& f);

// --- Hom-space bases --------------------------------------------------------

// All walled diagrams [r1,s1] -> [r2,s2], in a deterministic order; empty
// unless r1+s2 = r2+s1 (in which case there are (r1+s2)! of them).
std::vector<WalledDiagram> hom_basis(GLObject src, GLObject dst);
// All Brauer diagrams [r1] -> [r2]; empty for odd r1+r2, else (r1+r2-1)!!.
std::vector<BrauerDiagram> hom_basis(OObject src, OObject dst);

std::size_t hom_dim(GLObject src, GLObject dst);
std::size_t hom_dim(OObject src, OObject dst);

// --- Gram determinants ------------------------------------------------------

struct GramReport {
    Poly det;
    std::vector<std::pair<Rat, unsigned>> roots; // rational roots + multiplicity
    bool splits_over_integers = false;
};

// det of G_ij = closure_trace(d_i o d_j) over the hom basis of End(obj).
GramReport gram_det(GLObject obj);
GramReport gram_det(OObject obj);

// --- Random sampling (property tests) ---------------------------------------

WalledDiagram random_diagram(GLObject src, GLObject dst, std::mt19937_64& rng);
BrauerDiagram random_diagram(OObject src, OObject dst, std::mt19937_64& rng);

// Objects form a monoid under tensor product.
GLObject operator+(GLObject a, GLObject b);
OObject operator+(OObject a, OObject b);

// --- template definitions ----------------------------------------------------

template <class Diag>
void DiagExpr<Diag>::add_term(const Diag& d, const RatFunc& c) {
    if (!(d.src() == src_ && d.dst() == dst_))
        throw BoundaryMismatch("diagram term does not match element shape");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
        terms_.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

template <class Diag>
DiagExpr<Diag>& DiagExpr<Diag>::operator+=(const DiagExpr& o) {
    if (!(o.src_ == src_ && o.dst_ == dst_))
        throw BoundaryMismatch("adding diagram elements of different shapes");
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

template <class Diag>
DiagExpr<Diag>& DiagExpr<Diag>::operator-=(const DiagExpr& o) {
    if (!(o.src_ == src_ && o.dst_ == dst_))
        throw BoundaryMismatch("subtracting diagram elements of different shapes");
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

template <class Diag>
DiagExpr<Diag>& DiagExpr<Diag>::operator*=(const RatFunc& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [d, coeff] : terms_) coeff *= c;
    return *this;
}

template <class Diag>
std::string DiagExpr<Diag>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        bool unit = c.is_poly() && c.num() == Poly(1);
        if (!unit) out += "(" + c.str() + ")*";
        out += "[" + d.str() + "]";
    }
    return out;
}

template <class Diag>
DiagExpr<Diag> compose(const DiagExpr<Diag>& g, const DiagExpr<Diag>& f) {
    if (!(g.src() == f.dst()))
        throw BoundaryMismatch("compose: target of f differs from source of g");
    DiagExpr<Diag> out(f.src(), g.dst());
    Poly t = Poly::variable();
    for (const auto& [dg, cg] : g.terms())
        for (const auto& [df, cf] : f.terms()) {
            auto [d, loops] = Diag::compose(dg, df);
            out.add_term(d, cg * cf * RatFunc(t.pow(loops)));
        }
    return out;
}

template <class Diag>
DiagExpr<Diag> tensor(const DiagExpr<Diag>& f, const DiagExpr<Diag>& g) {
    DiagExpr<Diag> out(f.src() + g.src(), f.dst() + g.dst());
    for (const auto& [df, cf] : f.terms())
        for (const auto& [dg, cg] : g.terms())
            out.add_term(Diag::tensor(df, dg), cf * cg);
    return out;
}

template <class Diag>
RatFunc closure_trace(const DiagExpr<Diag>& f) {
    if (!(f.src() == f.dst()))
        throw BoundaryMismatch("closure trace of a non-endomorphism");
    RatFunc acc;
    Poly t = Poly::variable();
    for (const auto& [d, c] : f.terms()) acc += c * RatFunc(t.pow(d.closure_loops()));
    return acc;
}

} // namespace deligne

#endif
