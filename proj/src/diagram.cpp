#include "deligne/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "deligne/errors.hpp"

namespace deligne {

namespace detail {

EdgeList canonical_edges(EdgeList edges) {
    for (auto& [a, b] : edges)
        if (a > b) std::swap(a, b);
    std::sort(edges.begin(), edges.end());
    return edges;
}

bool is_perfect_matching(const EdgeList& edges, int n_points) {
    if (static_cast<int>(edges.size()) * 2 != n_points) return false;
    std::vector<char> seen(n_points, 0);
    for (const auto& [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n_points || b >= n_points || a == b) return false;
        if (seen[a] || seen[b]) return false;
        seen[a] = seen[b] = 1;
    }
    return true;
}

namespace {

std::vector<int> partner_array(const EdgeList& edges, int n_points) {
    std::vector<int> p(n_points, -1);
    for (const auto& [a, b] : edges) {
        p[a] = b;
        p[b] = a;
    }
    return p;
}

} // namespace

GlueResult glue(const EdgeList& f, int bot, int mid, const EdgeList& g, int top) {
    std::vector<int> pf = partner_array(f, bot + mid);
    std::vector<int> pg = partner_array(g, mid + top);
    std::vector<char> mid_visited(mid, 0);

    GlueResult res;
    res.loops = 0;
    res.edges.reserve((bot + top) / 2);

    // Through-strands: from each outer point follow partners, hopping between
    // the two matchings at every middle point, until another outer point.
    std::vector<char> outer_done(bot + top, 0);
    for (int x = 0; x < bot + top; ++x) {
        if (outer_done[x]) continue;
        bool in_f = x < bot;
        int idx = in_f ? x : mid + (x - bot);
        int end = -1;
        while (end < 0) {
            if (in_f) {
                int y = pf[idx];
                if (y < bot) {
                    end = y;
                } else {
                    int m = y - bot;
                    mid_visited[m] = 1;
                    in_f = false;
                    idx = m;
                }
            } else {
                int y = pg[idx];
                if (y >= mid) {
                    end = bot + (y - mid);
                } else {
                    mid_visited[y] = 1;
                    in_f = true;
                    idx = bot + y;
                }
            }
        }
        outer_done[x] = outer_done[end] = 1;
        res.edges.emplace_back(x, end);
    }

    // Whatever middle points remain lie on closed loops.
    for (int m0 = 0; m0 < mid; ++m0) {
        if (mid_visited[m0]) continue;
        ++res.loops;
        int m = m0;
        bool use_f = true;
        while (true) {
            mid_visited[m] = 1;
            m = use_f ? pf[bot + m] - bot : pg[m];
            use_f = !use_f;
            if (m == m0 && use_f) break;
        }
    }

    res.edges = canonical_edges(std::move(res.edges));
    return res;
}

unsigned closure_loops(const EdgeList& edges, int n) {
    std::vector<int> partner = partner_array(edges, 2 * n);
    std::vector<char> visited(2 * n, 0);
    unsigned loops = 0;
    for (int p0 = 0; p0 < 2 * n; ++p0) {
        if (visited[p0]) continue;
        ++loops;
        int p = p0;
        do {
            visited[p] = 1;
            int q = partner[p];
            visited[q] = 1;
            p = q < n ? q + n : q - n; // closure arc
        } while (p != p0);
    }
    return loops;
}

} // namespace detail

// --- GLObject / WalledDiagram ----------------------------------------------

std::string GLObject::str() const {
    return "[" + std::to_string(r) + "," + std::to_string(s) + "]";
}

GLObject operator+(GLObject a, GLObject b) {
    return GLObject{a.r + b.r, a.s + b.s};
}

namespace {

enum class Flow { Out, In };

// Orientation of a global endpoint of a walled diagram.
Flow walled_flow(int p, GLObject src, GLObject dst) {
    int nb = static_cast<int>(src.points());
    if (p < static_cast<int>(src.r)) return Flow::Out;       // bottom V
    if (p < nb) return Flow::In;                             // bottom V*
    if (p < nb + static_cast<int>(dst.r)) return Flow::In;   // top V
    return Flow::Out;                                        // top V*
}

} // namespace

WalledDiagram::WalledDiagram(GLObject src, GLObject dst, EdgeList edges)
    : src_(src), dst_(dst), edges_(detail::canonical_edges(std::move(edges))) {
    int n = static_cast<int>(src_.points() + dst_.points());
    if (!detail::is_perfect_matching(edges_, n))
        throw DomainError("walled diagram: not a perfect matching on " + std::to_string(n) +
                          " points");
    for (const auto& [a, b] : edges_) {
        Flow fa = walled_flow(a, src_, dst_), fb = walled_flow(b, src_, dst_);
        if (fa == fb)
            throw DomainError("walled diagram: strand " + std::to_string(a + 1) + "-" +
                              std::to_string(b + 1) + " violates orientation");
    }
}

WalledDiagram WalledDiagram::identity(GLObject obj) {
    EdgeList edges;
    int nb = static_cast<int>(obj.points());
    for (int i = 0; i < nb; ++i) edges.emplace_back(i, nb + i);
    return WalledDiagram(obj, obj, std::move(edges));
}

std::pair<WalledDiagram, unsigned> WalledDiagram::compose(const WalledDiagram& g,
                                                          const WalledDiagram& f) {
    if (!(g.src_ == f.dst_))
        throw BoundaryMismatch("compose: middle objects differ: " + g.src_.str() + " vs " +
                               f.dst_.str());
    auto glued = detail::glue(f.edges_, f.src_.points(), f.dst_.points(), g.edges_,
                              g.dst_.points());
    return {WalledDiagram(f.src_, g.dst_, std::move(glued.edges)), glued.loops};
}

WalledDiagram WalledDiagram::tensor(const WalledDiagram& f, const WalledDiagram& g) {
    unsigned a1 = f.src_.r, b1 = f.src_.s, a2 = f.dst_.r, b2 = f.dst_.s;
    unsigned c1 = g.src_.r, d1 = g.src_.s, c2 = g.dst_.r, d2 = g.dst_.s;
    int NB = static_cast<int>(a1 + b1 + c1 + d1);

    auto remap_f = [&](int p) -> int {
        if (p < static_cast<int>(a1)) return p;
        if (p < static_cast<int>(a1 + b1)) return static_cast<int>(a1 + c1) + (p - a1);
        p -= static_cast<int>(a1 + b1);
        if (p < static_cast<int>(a2)) return NB + p;
        return NB + static_cast<int>(a2 + c2) + (p - a2);
    };
    auto remap_g = [&](int p) -> int {
        if (p < static_cast<int>(c1)) return static_cast<int>(a1) + p;
        if (p < static_cast<int>(c1 + d1)) return static_cast<int>(a1 + c1 + b1) + (p - c1);
        p -= static_cast<int>(c1 + d1);
        if (p < static_cast<int>(c2)) return NB + static_cast<int>(a2) + p;
        return NB + static_cast<int>(a2 + c2 + b2) + (p - c2);
    };

    EdgeList edges;
    edges.reserve(f.edges_.size() + g.edges_.size());
    for (const auto& [a, b] : f.edges_) edges.emplace_back(remap_f(a), remap_f(b));
    for (const auto& [a, b] : g.edges_) edges.emplace_back(remap_g(a), remap_g(b));
    return WalledDiagram(GLObject{a1 + c1, b1 + d1}, GLObject{a2 + c2, b2 + d2},
                         std::move(edges));
}

unsigned WalledDiagram::closure_loops() const {
    if (!(src_ == dst_)) throw BoundaryMismatch("closure of a non-endomorphism");
    return detail::closure_loops(edges_, src_.points());
}

std::string WalledDiagram::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) out << ",";
        out << edges_[i].first + 1 << "-" << edges_[i].second + 1;
    }
    return out.str();
}

// --- OObject / BrauerDiagram ------------------------------------------------

std::string OObject::str() const {
    return "[" + std::to_string(r) + "]";
}

OObject operator+(OObject a, OObject b) {
    return OObject{a.r + b.r};
}

BrauerDiagram::BrauerDiagram(OObject src, OObject dst, EdgeList edges)
    : src_(src), dst_(dst), edges_(detail::canonical_edges(std::move(edges))) {
    int n = static_cast<int>(src_.points() + dst_.points());
    if (!detail::is_perfect_matching(edges_, n))
        throw DomainError("Brauer diagram: not a perfect matching on " + std::to_string(n) +
                          " points");
}

BrauerDiagram BrauerDiagram::identity(OObject obj) {
    EdgeList edges;
    int nb = static_cast<int>(obj.points());
    for (int i = 0; i < nb; ++i) edges.emplace_back(i, nb + i);
    return BrauerDiagram(obj, obj, std::move(edges));
}

std::pair<BrauerDiagram, unsigned> BrauerDiagram::compose(const BrauerDiagram& g,
                                                          const BrauerDiagram& f) {
    if (!(g.src_ == f.dst_))
        throw BoundaryMismatch("compose: middle objects differ: " + g.src_.str() + " vs " +
                               f.dst_.str());
    auto glued = detail::glue(f.edges_, f.src_.points(), f.dst_.points(), g.edges_,
                              g.dst_.points());
    return {BrauerDiagram(f.src_, g.dst_, std::move(glued.edges)), glued.loops};
}

BrauerDiagram BrauerDiagram::tensor(const BrauerDiagram& f, const BrauerDiagram& g) {
    unsigned a1 = f.src_.r, a2 = f.dst_.r;
    unsigned c1 = g.src_.r, c2 = g.dst_.r;
    int NB = static_cast<int>(a1 + c1);

    auto remap_f = [&](int p) -> int {
        return p < static_cast<int>(a1) ? p : NB + (p - static_cast<int>(a1));
    };
    auto remap_g = [&](int p) -> int {
        return p < static_cast<int>(c1) ? static_cast<int>(a1) + p
                                        : NB + static_cast<int>(a2) + (p - static_cast<int>(c1));
    };

    EdgeList edges;
    edges.reserve(f.edges_.size() + g.edges_.size());
    for (const auto& [a, b] : f.edges_) edges.emplace_back(remap_f(a), remap_f(b));
    for (const auto& [a, b] : g.edges_) edges.emplace_back(remap_g(a), remap_g(b));
    return BrauerDiagram(OObject{a1 + c1}, OObject{a2 + c2}, std::move(edges));
}

unsigned BrauerDiagram::closure_loops() const {
    if (!(src_ == dst_)) throw BoundaryMismatch("closure of a non-endomorphism");
    return detail::closure_loops(edges_, src_.points());
}

std::string BrauerDiagram::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        if (i) out << ",";
        out << edges_[i].first + 1 << "-" << edges_[i].second + 1;
    }
    return out.str();
}

// --- Hom bases ----------------------------------------------------------------

std::vector<WalledDiagram> hom_basis(GLObject src, GLObject dst) {
    if (src.r + dst.s != dst.r + src.s) return {};
    int nb = static_cast<int>(src.points());
    std::vector<int> outgoing, incoming;
    for (int i = 0; i < static_cast<int>(src.r); ++i) outgoing.push_back(i);
    for (int i = 0; i < static_cast<int>(dst.s); ++i)
        outgoing.push_back(nb + static_cast<int>(dst.r) + i);
    for (int i = 0; i < static_cast<int>(src.s); ++i) incoming.push_back(static_cast<int>(src.r) + i);
    for (int i = 0; i < static_cast<int>(dst.r); ++i) incoming.push_back(nb + i);

    std::vector<WalledDiagram> basis;
    std::sort(incoming.begin(), incoming.end());
    do {
        EdgeList edges;
        for (std::size_t k = 0; k < outgoing.size(); ++k)
            edges.emplace_back(outgoing[k], incoming[k]);
        basis.emplace_back(src, dst, std::move(edges));
    } while (std::next_permutation(incoming.begin(), incoming.end()));
    return basis;
}

namespace {

void enumerate_matchings(std::vector<int>& free_points, EdgeList& current,
                         std::vector<EdgeList>& out) {
    if (free_points.empty()) {
        out.push_back(current);
        return;
    }
    int a = free_points.front();
    for (std::size_t k = 1; k < free_points.size(); ++k) {
        int b = free_points[k];
        std::vector<int> rest;
        rest.reserve(free_points.size() - 2);
        for (std::size_t j = 1; j < free_points.size(); ++j)
            if (j != k) rest.push_back(free_points[j]);
        current.emplace_back(a, b);
        enumerate_matchings(rest, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<BrauerDiagram> hom_basis(OObject src, OObject dst) {
    unsigned n = src.r + dst.r;
    if (n % 2 != 0) return {};
    std::vector<int> points(n);
    std::iota(points.begin(), points.end(), 0);
    EdgeList current;
    std::vector<EdgeList> matchings;
    enumerate_matchings(points, current, matchings);
    std::vector<BrauerDiagram> basis;
    basis.reserve(matchings.size());
    for (auto& m : matchings) basis.emplace_back(src, dst, std::move(m));
    return basis;
}

std::size_t hom_dim(GLObject src, GLObject dst) {
    if (src.r + dst.s != dst.r + src.s) return 0;
    std::size_t dim = 1;
    for (std::size_t k = 2; k <= src.r + dst.s; ++k) dim *= k;
    return dim;
}

std::size_t hom_dim(OObject src, OObject dst) {
    unsigned n = src.r + dst.r;
    if (n % 2 != 0) return 0;
    std::size_t dim = 1;
    for (unsigned k = 3; k < n; k += 2) dim *= k;
    return dim;
}

// --- Gram determinants ----------------------------------------------------------

namespace {

// Fraction-free Bareiss elimination; exact over Q[t].
Poly det_bareiss(std::vector<std::vector<Poly>> m) {
    std::size_t n = m.size();
    if (n == 0) return Poly(1);
    int sign = 1;
    Poly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly();
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divexact(prev);
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

template <class Diag>
GramReport gram_det_impl(const std::vector<Diag>& basis) {
    std::size_t n = basis.size();
    Poly t = Poly::variable();
    std::vector<std::vector<Poly>> g(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto [d, loops] = Diag::compose(basis[i], basis[j]);
            g[i][j] = t.pow(loops + d.closure_loops());
        }
    GramReport rep;
    rep.det = det_bareiss(std::move(g));
    auto rr = rational_roots(rep.det);
    rep.roots = rr.roots;
    rep.splits_over_integers = rr.splits_over_integers();
    return rep;
}

} // namespace

GramReport gram_det(GLObject obj) {
    return gram_det_impl(hom_basis(obj, obj));
}

GramReport gram_det(OObject obj) {
    return gram_det_impl(hom_basis(obj, obj));
}

// --- Random sampling --------------------------------------------------------------

WalledDiagram random_diagram(GLObject src, GLObject dst, std::mt19937_64& rng) {
    if (src.r + dst.s != dst.r + src.s)
        throw DomainError("random_diagram: hom space is zero");
    int nb = static_cast<int>(src.points());
    std::vector<int> outgoing, incoming;
    for (int i = 0; i < static_cast<int>(src.r); ++i) outgoing.push_back(i);
    for (int i = 0; i < static_cast<int>(dst.s); ++i)
        outgoing.push_back(nb + static_cast<int>(dst.r) + i);
    for (int i = 0; i < static_cast<int>(src.s); ++i) incoming.push_back(static_cast<int>(src.r) + i);
    for (int i = 0; i < static_cast<int>(dst.r); ++i) incoming.push_back(nb + i);
    std::shuffle(incoming.begin(), incoming.end(), rng);
    EdgeList edges;
    for (std::size_t k = 0; k < outgoing.size(); ++k)
        edges.emplace_back(outgoing[k], incoming[k]);
    return WalledDiagram(src, dst, std::move(edges));
}

BrauerDiagram random_diagram(OObject src, OObject dst, std::mt19937_64& rng) {
    unsigned n = src.r + dst.r;
    if (n % 2 != 0) throw DomainError("random_diagram: hom space is zero");
    std::vector<int> points(n);
    std::iota(points.begin(), points.end(), 0);
    EdgeList edges;
    while (!points.empty()) {
        int a = points.front();
        points.erase(points.begin());
        std::uniform_int_distribution<std::size_t> pick(0, points.size() - 1);
        std::size_t k = pick(rng);
        int b = points[k];
        points.erase(points.begin() + k);
        edges.emplace_back(a, b);
    }
    return BrauerDiagram(src, dst, std::move(edges));
}

} // namespace deligne
