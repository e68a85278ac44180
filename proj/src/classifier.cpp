#include "subiso/classifier.hpp"

#include <algorithm>

#include "subiso/core.hpp"
#include "subiso/decomposition.hpp"

namespace subiso {

bool in_p_prime(const PTriple& t) {
    if (t.alpha >= t.beta && t.beta >= 2 && t.gamma >= 1) return true;
    if (t.beta == 2 && t.gamma == 0 && t.alpha >= 2) return true;
    if (t == PTriple{1, 0, 0} || t == PTriple{2, 1, 0}) return true;
    return false;
}

std::vector<int> PShape::lengths() const {
    std::vector<int> l;
    for (auto& p : paths) l.push_back(static_cast<int>(p.size()) - 1);
    std::sort(l.begin(), l.end());
    return l;
}

std::optional<PShape> recognize_p_shape(const Pattern& H) {
    const int n = H.n();
    if (n < 2 || !H.connected()) return std::nullopt;
    PShape sh;
    std::vector<int> hubs;
    int deg1 = 0;
    for (int u = 0; u < n; ++u) {
        if (H.degree(u) >= 3) hubs.push_back(u);
        if (H.degree(u) == 1) ++deg1;
        if (H.degree(u) == 0) return std::nullopt;
    }
    if (hubs.empty()) {
        if (deg1 == 2 && H.m() == n - 1) {  // a path: the two ends are the hubs
            int s = -1;
            for (int u = 0; u < n; ++u)
                if (H.degree(u) == 1) {
                    s = u;
                    break;
                }
            std::vector<int> p{s};
            int prev = -1, cur = s;
            while (true) {
                int nxt = -1;
                for (int v : H.nbrs(cur))
                    if (v != prev) nxt = v;
                if (nxt < 0) break;
                p.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            sh.s = s;
            sh.t = p.back();
            sh.paths = {p};
            return sh;
        }
        if (deg1 != 0 || H.m() != n) return std::nullopt;
        // cycle: walk from node 0 towards its smaller neighbour
        std::vector<int> order{0};
        int prev = 0, cur = H.nbrs(0)[0];
        while (cur != 0) {
            order.push_back(cur);
            int nxt = H.nbrs(cur)[0] == prev ? H.nbrs(cur)[1] : H.nbrs(cur)[0];
            prev = cur;
            cur = nxt;
        }
        sh.s = order[0];
        if (n == 3) {
            sh.t = order[2];
            sh.paths = {{order[0], order[2]}, {order[0], order[1], order[2]}};
        } else {
            sh.t = order[2];
            std::vector<int> other{order[0]};
            for (int i = n - 1; i >= 2; --i) other.push_back(order[i]);
            sh.paths = {{order[0], order[1], order[2]}, other};
        }
        return sh;
    }
    if (hubs.size() != 2 || deg1 != 0) return std::nullopt;
    sh.s = hubs[0];
    sh.t = hubs[1];
    if (H.degree(sh.s) != H.degree(sh.t)) return std::nullopt;
    int inner = 0;
    for (int first : H.nbrs(sh.s)) {
        std::vector<int> p{sh.s};
        int prev = sh.s, cur = first;
        while (cur != sh.t) {
            if (cur == sh.s || H.degree(cur) != 2) return std::nullopt;
            p.push_back(cur);
            ++inner;
            int nxt = H.nbrs(cur)[0] == prev ? H.nbrs(cur)[1] : H.nbrs(cur)[0];
            prev = cur;
            cur = nxt;
        }
        p.push_back(sh.t);
        sh.paths.push_back(p);
    }
    if (inner != n - 2) return std::nullopt;
    return sh;
}

std::optional<std::vector<int>> recognize_p_graph(const Pattern& H) {
    auto sh = recognize_p_shape(H);
    if (!sh) return std::nullopt;
    auto l = sh->lengths();
    if (l.size() == 2) {  // any cycle is normalised to {2, n-2}, the triangle to {1, 2}
        int total = l[0] + l[1];
        if (total == 3) return std::vector<int>{1, 2};
        return std::vector<int>{2, total - 2};
    }
    return l;
}

std::optional<PTriple> canonical_triple(std::vector<int> l) {
    std::sort(l.begin(), l.end());
    if (l.empty()) return std::nullopt;
    if (l.size() == 1) {
        if (l[0] == 1) return PTriple{1, 0, 0};
        return std::nullopt;
    }
    if (l.size() == 2) {
        int total = l[0] + l[1];
        if (l[0] < 1 || total < 3) return std::nullopt;
        if (total == 3) return PTriple{2, 1, 0};
        return PTriple{total - 2, 2, 0};
    }
    if (l[0] < 2) return std::nullopt;
    int big = 0;
    for (int x : l)
        if (x >= 3) ++big;
    if (big > 2) return std::nullopt;
    const int k = static_cast<int>(l.size());
    return PTriple{l[k - 1], l[k - 2], k - 2};
}

std::optional<Roles> assign_roles(const Pattern& H) {
    auto sh = recognize_p_shape(H);
    if (!sh) return std::nullopt;
    auto trip = canonical_triple(sh->lengths());
    if (!trip) return std::nullopt;
    Roles r;
    r.triple = *trip;
    auto paths = sh->paths;
    std::stable_sort(paths.begin(), paths.end(), [](auto& x, auto& y) { return x.size() > y.size(); });
    if (*trip == PTriple{1, 0, 0}) {
        r.a = paths[0];
        return r;
    }
    if (*trip == PTriple{2, 1, 0}) {
        r.a = paths[0];
        r.b = paths[1];
        return r;
    }
    // cycles arrive from recognize_p_shape with hubs two steps apart, so b is always a 2-path
    r.a = paths[0];
    r.b = paths[1];
    for (std::size_t i = 2; i < paths.size(); ++i) r.c.push_back(paths[i][1]);
    return r;
}

Rational f2(Rational a, Rational b, Rational g) {
    return 2 * b * g + a * b / 2 - b * b / 2 + 3 * b / 2 - a / 2 - 3 * g;
}
Rational f4(Rational a, Rational b, Rational g) {
    return 2 * b * g + a * b / 2 - b * b / 2 + b - a / 2 - 2 * g + Rational(3, 2);
}
Rational f5(Rational a, Rational b, Rational g) {
    return 2 * b * g + a * b / 2 - b * b / 2 + 2 * b - a / 2 - 4 * g - Rational(3, 2);
}

int savings_case(const PTriple& t) {
    if (!in_p_prime(t)) throw std::invalid_argument("triple outside the simple family");
    const std::int64_t a = t.alpha, b = t.beta, g = t.gamma;
    const bool even = (a + b) % 2 == 0;
    bool guard[9] = {};
    guard[1] = even && a > b && b < g + 2;
    guard[2] = even && 3 * b < a + 6 * g + 8 && (a == b || b >= g + 2);
    guard[3] = even && 2 * b <= a + 4 * g + 6 && 3 * b >= a + 6 * g + 8;
    guard[4] = !even && b < 2 * g + 3;
    guard[5] = !even && 2 * b <= a + 4 * g + 6 && b >= 2 * g + 3;
    guard[6] = a % 4 == 0 && 2 * b > a + 4 * g + 6;
    guard[7] = a % 2 == 1 && 2 * b > a + 4 * g + 6;
    guard[8] = a % 4 == 2 && 2 * b > a + 4 * g + 6;
    int which = 0;
    for (int i = 1; i <= 8; ++i)
        if (guard[i]) {
            if (which) throw std::logic_error("savings: several cases apply");
            which = i;
        }
    if (!which) throw std::logic_error("savings: no case applies");
    return which;
}

Rational savings_exact(const PTriple& t) {
    const Rational a = t.alpha, b = t.beta, g = t.gamma;
    switch (savings_case(t)) {
        case 1: return 2 * b * g + a * b / 2 - b * b / 2 + b / 2 - a / 2 - 2 * g + 2;
        case 2: return 2 * b * g + a * b / 2 - b * b / 2 + 3 * b / 2 - a / 2 - 3 * g;
        case 3: return 2 * b * g + a * b / 2 - b * b / 2 + 3 * b - a - 6 * g - 4;
        case 4: return 2 * b * g + a * b / 2 - b * b / 2 + b - a / 2 - 2 * g + Rational(3, 2);
        case 5: return 2 * b * g + a * b / 2 - b * b / 2 + 2 * b - a / 2 - 4 * g - Rational(3, 2);
        case 6: return 2 * g * g + a * g + a * a / 8 + a / 2;
        case 7: return 2 * g * g + a * g + a * a / 8 + a / 2 + Rational(3, 8);
        default: return 2 * g * g + a * g + a * a / 8 + a / 2 + Rational(1, 2);
    }
}

int savings(const PTriple& t) {
    Rational v = savings_exact(t);
    if (v.denominator() != 1 || v.numerator() <= 0) throw std::logic_error("savings value is not a positive integer");
    return static_cast<int>(v.numerator());
}

Rational savings_alternative(const PTriple& t) {
    const Rational a = t.alpha, b = t.beta, g = t.gamma;
    switch (savings_case(t)) {
        case 1: return f4(a - 1, b, g);
        case 2: return f2(a, b, g);
        case 3: return f5(a, b - 1, g);
        case 4: return f4(a, b, g);
        case 5: return f5(a, b, g);
        default: {
            const std::int64_t al = t.alpha;
            Rational shifted = 2 * g + Rational(al + ((al - 1) % 4) + 3, 2);
            return f5(a, shifted, g);
        }
    }
}

std::string Verdict::c_string() const {
    if (!subquadratic) return ">=2";
    return "2-1/" + std::to_string(k);
}

Verdict classify(const Pattern& H) {
    Verdict v;
    v.subquadratic = true;
    v.k = 0;
    for (const auto& piece : decompose(H).pieces) {
        PieceReport rep;
        rep.nodes = piece;
        Pattern sub = H.induced(piece);
        if (auto l = recognize_p_graph(sub))
            if (auto t = canonical_triple(*l)) {
                rep.triple = t;
                rep.F = savings(*t);
            }
        if (!rep.F) {
            if (v.subquadratic) v.hard_witness = piece;
            v.subquadratic = false;
        } else {
            v.k = std::max(v.k, *rep.F);
        }
        v.pieces.push_back(std::move(rep));
    }
    if (!v.subquadratic) v.k = 0;
    return v;
}

}  // namespace subiso
