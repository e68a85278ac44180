#include "subiso/encoders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "subiso/decomposition.hpp"
#include "subiso/lift.hpp"
#include "subiso/materialize.hpp"

namespace subiso {

namespace {

std::vector<int> reversed(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

// v[from..to] inclusive; empty when from > to
std::vector<int> fwd(const std::vector<int>& v, int from, int to) {
    std::vector<int> out;
    for (int i = from; i <= to; ++i) out.push_back(v[i]);
    return out;
}

// v[from], v[from-1], ..., v[to]; empty when from < to
std::vector<int> bwd(const std::vector<int>& v, int from, int to) {
    std::vector<int> out;
    for (int i = from; i >= to; --i) out.push_back(v[i]);
    return out;
}

FullEncoding run(const HostGraph& G, const DegreeProfile& prof, const CaseFn& fn) {
    return FullEncoding{run_cases(G, prof, fn)};
}

// ---------- cycle-closing routine over a path d[0..k] with a relation on its ends ----------

struct BcPlan {
    std::vector<int> d;
    int ell = 1;
    int kind = 3;  // 1 (after mirroring, 1' becomes 1), 2 or 3
    int r = -1;
};

BcPlan bc_decide(Branch& br, const std::vector<int>& d, int ell) {
    const int k = static_cast<int>(d.size()) - 1;
    ell = std::max(ell, 1);
    for (int r = 0; r <= std::min(ell - 1, k - 1); ++r)
        if (br.big(d[r])) return {d, ell, 1, r};
    for (int r = k; r >= std::max(k - ell + 1, 1); --r)
        if (br.big(d[r])) return {reversed(d), ell, 1, k - r};
    return {d, ell, 2 * ell > k + 1 ? 2 : 3, -1};
}

void bc_build(PartialMaker& pm, const Ctx& ctx, const BcPlan& p, RelPtr red, int red_bag) {
    const auto& d = p.d;
    const int k = static_cast<int>(d.size()) - 1;
    const std::vector<int> ends{d[0], d[k]};
    pm.note("/bc" + std::to_string(p.kind));
    if (p.kind == 1) {
        int prev = pm.bag(ctx.extend(red, ends, fwd(d, 1, p.r)));
        pm.link(red_bag, prev);
        for (int i = k - 1; i >= p.r + 1; --i) {
            int b = pm.bag(ctx.path({d[p.r], d[i], d[i + 1]}));
            pm.link(prev, b);
            prev = b;
        }
    } else if (p.kind == 2) {
        int b1 = pm.bag(ctx.extend(red, ends, fwd(d, 1, std::min(p.ell - 1, k - 1))));
        int b2 = pm.bag(ctx.extend(red, ends, bwd(d, k - 1, std::max(k - p.ell + 1, 1))));
        pm.link(red_bag, b1);
        pm.link(b1, b2);
    } else {
        int b1 = pm.bag(ctx.extend(red, ends, fwd(d, 1, p.ell - 1)));
        int b2 = pm.bag(ctx.path(bwd(d, k, p.ell - 1)));
        pm.link(red_bag, b1);
        pm.link(b1, b2);
    }
}

// ---------- edge ----------

FullEncoding edge_impl(const HostGraph& G) {
    DegreeProfile prof = degree_split(G, Rational(1), 1);
    return run(G, prof, [](Branch& br, const Ctx& ctx, std::vector<PartialEncoding>& out) {
        br.freeze();
        PartialMaker pm("edge");
        pm.bag(ctx.path({0, 1}));
        out.push_back(pm.finish());
    });
}

// ---------- even cycle ----------

FullEncoding cycle_even(const HostGraph& G, const std::vector<int>& d) {
    const int k = static_cast<int>(d.size());
    const int half = k / 2;
    DegreeProfile prof = degree_split(G, Rational(1, half), 2);
    return run(G, prof, [&](Branch& br, const Ctx& ctx, std::vector<PartialEncoding>& out) {
        for (int i = 0; i < k; ++i)
            if (br.big(d[i])) {
                br.freeze();
                PartialMaker pm("cycle/1");
                star_plus_tree(pm, ctx, {d[i]}, nullptr);
                out.push_back(pm.finish());
                return;
            }
        br.freeze();
        PartialMaker pm("cycle/2");
        int b1 = pm.bag(ctx.path(fwd(d, 0, half)));
        int b2 = pm.bag(ctx.path(concat({{d[0]}, bwd(d, k - 1, half)})));
        pm.link(b1, b2);
        out.push_back(pm.finish());
    });
}

// ---------- P(alpha, gamma x 2) with even alpha ----------

FullEncoding pa2c_even(const HostGraph& G, const std::vector<int>& a, const std::vector<int>& c) {
    const int al = static_cast<int>(a.size()) - 1;
    const int gam = static_cast<int>(c.size());
    const int ell = (al - 2) / 2;
    const Rational f(1, 2 * gam + ell);
    DegreeProfile prof = degree_split(G, f, 2);
    const std::uint64_t tau = ceil_pow(threshold_basis(G), Rational(gam) * f);
    return run(G, prof, [&](Branch& br, const Ctx& ctx, std::vector<PartialEncoding>& out) {
        for (int end : {0, al})
            if (br.big(a[end])) {
                br.freeze();
                PartialMaker pm(end == 0 ? "pa2c/1" : "pa2c/1'");
                star_plus_tree(pm, ctx, {a[end]}, nullptr);
                out.push_back(pm.finish());
                return;
            }
        bool any = false;
        for (int i = 1; i <= ell && !any; ++i) any = br.big(a[i]);
        for (int i = al - ell; i < al && !any; ++i) any = br.big(a[i]);
        if (!any) {
            br.freeze();
            PartialMaker pm("pa2c/2");
            int b1 = pm.bag(ctx.path(concat({{a[0], a[1]}, c, fwd(a, 2, ell + 1)})));
            int b2 = pm.bag(ctx.path(concat({{a[al], a[al - 1]}, c, bwd(a, al - 2, ell + 1)})));
            pm.link(b1, b2);
            out.push_back(pm.finish());
            return;
        }
        BcPlan bc = bc_decide(br, a, ell + 1);
        br.freeze();

        RelPtr star = ctx.path(concat({{a[0]}, c}));
        Dict D = build_dict(*star, c, {a[0]});
        {
            PartialMaker pm("pa2c/3.1");
            auto heavy = std::make_shared<Relation>(dict_keys(D, tau, true));
            star_plus_tree(pm, ctx, c, heavy);
            out.push_back(pm.finish());
        }
        {
            PartialMaker pm("pa2c/3.2");
            Dict light = dict_filter(D, tau, false);
            Plan plan;
            plan.steps.push_back(Step{a[al], nullptr});
            for (int x : c) plan.steps.push_back(Step{x, nullptr});
            plan.steps.push_back(Step{-1, &light});
            int down = pm.bag(ctx.run(plan));
            RelPtr ends = std::make_shared<Relation>(project(pm.rel(down), {a[0], a[al]}));
            int eb = pm.bag(ends);
            pm.link(down, eb);
            bc_build(pm, ctx, bc, ends, eb);
            out.push_back(pm.finish());
        }
    });
}

// ---------- P(alpha, beta, gamma x 2), alpha >= beta >= 3 ----------

struct PabcRoles {
    std::vector<int> a, b, c;
    int al() const { return static_cast<int>(a.size()) - 1; }
    int be() const { return static_cast<int>(b.size()) - 1; }
    PabcRoles mirrored() const { return {reversed(a), reversed(b), c}; }
};

// Case with a long run of low nodes on the a-path next to a0 and a heavy b-node next to the far hub.
void pabc_sc4(const PabcRoles& R, int ell, const Ctx& ctx, std::vector<PartialEncoding>& out, const char* tag) {
    const auto &a = R.a, &b = R.b, &c = R.c;
    const int al = R.al(), be = R.be();
    PartialMaker pm(tag);
    int prev = -1;
    for (int i = be - 2; i >= 1; --i) {
        int bb = pm.bag(ctx.path({b[be - 1], b[i - 1], b[i]}));
        if (prev >= 0) pm.link(prev, bb);
        prev = bb;
    }
    int b1 = pm.bag(ctx.path(concat({{b[be - 1], a[0], a[1]}, c, fwd(a, 2, ell)})));
    if (prev >= 0) pm.link(prev, b1);
    int b2 = pm.bag(ctx.path(concat({{a[ell], b[be], b[be - 1]}, c})));
    pm.link(b1, b2);
    prev = b2;
    for (int i = al - 1; i >= ell + 1; --i) {
        int ab = pm.bag(ctx.path({a[ell], a[i], a[i + 1]}));
        pm.link(prev, ab);
        prev = ab;
    }
    out.push_back(pm.finish());
}

void pabc_sc5(const PabcRoles& R, int ell, const Ctx& ctx, std::vector<PartialEncoding>& out) {
    const auto &a = R.a, &b = R.b, &c = R.c;
    const int al = R.al();
    PartialMaker pm("pabc/sc5");
    int b1 = pm.bag(ctx.path(concat({{a[0], b[1], b[2]}, c, fwd(a, 1, ell)})));
    int b2 = pm.bag(ctx.path(concat({{a[ell], b[3], b[2]}, c})));
    pm.link(b1, b2);
    int prev = b2;
    for (int i = al - 1; i >= ell + 1; --i) {
        int ab = pm.bag(ctx.path({a[ell], a[i], a[i + 1]}));
        pm.link(prev, ab);
        prev = ab;
    }
    out.push_back(pm.finish());
}

FullEncoding pabc_impl(const HostGraph& G, const PabcRoles& R, int F) {
    const auto &a = R.a, &b = R.b, &c = R.c;
    const int al = R.al(), be = R.be(), gam = static_cast<int>(c.size());
    const Rational f(1, F);
    DegreeProfile prof = degree_split(G, f, F);
    const std::uint64_t m = threshold_basis(G);
    std::vector<int> inner = concat({fwd(a, 1, al - 1), fwd(b, 1, be - 1)});

    return run(G, prof, [&](Branch& br, const Ctx& ctx, std::vector<PartialEncoding>& out) {
        for (int end : {0, al})
            if (br.big(a[end])) {
                br.freeze();
                PartialMaker pm(end == 0 ? "pabc/sc1" : "pabc/sc1'");
                star_plus_tree(pm, ctx, {a[end]}, nullptr);
                out.push_back(pm.finish());
                return;
            }
        bool all_moderate = true;
        for (int x : inner)
            if (br.ge(x, 2 * gam + 2)) {
                all_moderate = false;
                break;
            }
        if (all_moderate && al == be) {
            br.freeze();
            PartialMaker pm("pabc/sc2");
            int b1 = pm.bag(ctx.path(concat({{a[0], b[1]}, c, fwd(a, 1, al - 1)})));
            int b2 = pm.bag(ctx.path(concat({{a[al], a[al - 1]}, c, bwd(b, be - 1, 1)})));
            pm.link(b1, b2);
            out.push_back(pm.finish());
            return;
        }
        if (all_moderate) {
            BcPlan bc = bc_decide(br, a, F - (be - 1) * (2 * gam + 1));
            br.freeze();
            PartialMaker pm("pabc/sc3");
            int bb = pm.bag(ctx.path(b));
            int prev = bb;
            for (int x : c) {
                int cb = pm.bag(ctx.extend(pm.ptr(bb), b, {x}));
                pm.link(prev, cb);
                prev = cb;
            }
            RelPtr ends = std::make_shared<Relation>(project(pm.rel(bb), {a[0], a[al]}));
            int eb = pm.bag(ends);
            pm.link(prev, eb);
            bc_build(pm, ctx, bc, ends, eb);
            out.push_back(pm.finish());
            return;
        }
        for (int side = 0; side < 2; ++side) {
            const PabcRoles S = side == 0 ? R : R.mirrored();
            for (int ell = 1; ell <= al - 1; ++ell) {
                if (ell >= 2 && br.big(S.a[ell - 1])) break;
                if (br.ge(S.a[ell], gam + 2) && br.ge(S.b[be - 1], gam + ell + 1)) {
                    br.freeze();
                    pabc_sc4(S, ell, ctx, out, side == 0 ? "pabc/sc4" : "pabc/sc4'");
                    return;
                }
            }
        }
        if (be == 3) {
            for (int ell = 1; 2 * ell <= al; ++ell) {
                if (ell >= 2 && (br.big(a[ell - 1]) || br.big(a[al - ell + 1]))) break;
                if (br.ge(a[ell], gam + 2) && !br.ge(b[1], gam + ell + 1)) {
                    br.freeze();
                    pabc_sc5(R, ell, ctx, out);
                    return;
                }
            }
        }

        // general case: the node of largest class, found by scanning classes downwards
        int top = -1, dmax = -1;
        for (int t = F; t >= 2 * gam + 2 && top < 0; --t)
            for (int x : inner)
                if (br.ge(x, t)) {
                    top = t, dmax = x;
                    break;
                }
        if (top < 0) throw std::logic_error("pabc: no heavy inner node after special cases");
        const int k = top - 2 * gam;
        int spent = 2 * gam + 1 + br.hi(b[1]);
        for (int i = 3; i <= be - 1; ++i) spent += br.hi(b[i]);
        const int k2 = F - spent;
        const bool option1 = k >= k2;
        BcPlan bc_a = bc_decide(br, a, std::max(k, k2));
        BcPlan bc_b;
        if (option1) bc_b = bc_decide(br, b, k);
        br.freeze();

        if (option1) {
            RelPtr star = ctx.path(concat({{a[0]}, c}));
            Dict D = build_dict(*star, c, {a[0]});
            const std::uint64_t tau = ceil_pow(m, Rational(1) - Rational(top - gam - 1) * f);
            {
                PartialMaker pm("pabc/opt1-heavy");
                auto heavy = std::make_shared<Relation>(dict_keys(D, tau, true));
                star_plus_tree(pm, ctx, concat({{dmax}, c}), heavy, c);
                out.push_back(pm.finish());
            }
            PartialMaker pm("pabc/opt1-light");
            Dict light = dict_filter(D, tau, false);
            Plan plan;
            plan.steps.push_back(Step{a[al], nullptr});
            for (int x : c) plan.steps.push_back(Step{x, nullptr});
            plan.steps.push_back(Step{-1, &light});
            int down = pm.bag(ctx.run(plan));
            RelPtr ends = std::make_shared<Relation>(project(pm.rel(down), {a[0], a[al]}));
            int eb = pm.bag(ends);
            pm.link(down, eb);
            bc_build(pm, ctx, bc_b, ends, eb);
            bc_build(pm, ctx, bc_a, ends, eb);
            out.push_back(pm.finish());
            return;
        }

        RelPtr r1 = ctx.path(concat({{a[0], b[1], b[2]}, c}));
        std::vector<int> key = concat({{b[2]}, c});
        Dict D = build_dict(*r1, key, {a[0], b[1]});
        const std::uint64_t tau = ceil_pow(m, Rational(gam + br.hi(b[1]) + 1) * f);
        {
            PartialMaker pm("pabc/opt2-heavy");
            auto heavy = std::make_shared<Relation>(dict_keys(D, tau, true));
            star_plus_tree(pm, ctx, key, heavy);
            out.push_back(pm.finish());
        }
        PartialMaker pm("pabc/opt2-light");
        Dict light = dict_filter(D, tau, false);
        Plan plan;
        for (int x : concat({{b[be], b[be - 1]}, c, bwd(b, be - 2, 2)})) plan.steps.push_back(Step{x, nullptr});
        plan.steps.push_back(Step{-1, &light});
        int down = pm.bag(ctx.run(plan));
        RelPtr ends = std::make_shared<Relation>(project(pm.rel(down), {a[0], a[al]}));
        int eb = pm.bag(ends);
        pm.link(down, eb);
        bc_build(pm, ctx, bc_a, ends, eb);
        out.push_back(pm.finish());
    });
}

// ---------- stitching across clique separators ----------

std::vector<PartialEncoding> relabel(const FullEncoding& E, const std::vector<int>& node_of,
                                     const std::vector<int>& host_of) {
    std::vector<PartialEncoding> out;
    std::map<const Relation*, RelPtr> memo;
    for (const auto& p : E.partials) {
        PartialEncoding q;
        q.tag = p.tag;
        q.td.edges = p.td.edges;
        for (const auto& r : p.sub) {
            auto it = memo.find(r.get());
            if (it == memo.end()) {
                auto nr = std::make_shared<Relation>();
                for (int x : r->attrs) nr->attrs.push_back(node_of[x]);  // node_of is increasing
                nr->data.reserve(r->data.size());
                for (int v : r->data) nr->data.push_back(host_of[v]);
                nr->sort_unique();
                it = memo.emplace(r.get(), nr).first;
            }
            q.td.bags.push_back(it->second->attrs);
            q.sub.push_back(it->second);
        }
        out.push_back(std::move(q));
    }
    return out;
}

int bag_containing(const TreeDecomposition& td, const std::vector<int>& sep) {
    for (std::size_t b = 0; b < td.bags.size(); ++b)
        if (std::includes(td.bags[b].begin(), td.bags[b].end(), sep.begin(), sep.end())) return static_cast<int>(b);
    throw std::logic_error("no bag contains the separator clique");
}

std::vector<PartialEncoding> encode_split(const HostGraph& G, const SplitNode& s) {
    if (s.is_piece()) {
        Restricted R = restrict_host(G, s.nodes);
        return relabel(encode_piece(R.host), s.nodes, R.orig);
    }
    std::vector<PartialEncoding> acc{PartialEncoding{}};
    bool first = true;
    for (const auto& child : s.children) {
        auto parts = encode_split(G, child);
        std::vector<PartialEncoding> next;
        for (const auto& x : acc)
            for (const auto& y : parts) {
                if (first) {
                    next.push_back(y);
                    continue;
                }
                PartialEncoding z = x;
                const int off = static_cast<int>(z.td.bags.size());
                int bx = bag_containing(x.td, s.separator), by = bag_containing(y.td, s.separator);
                z.td.bags.insert(z.td.bags.end(), y.td.bags.begin(), y.td.bags.end());
                z.sub.insert(z.sub.end(), y.sub.begin(), y.sub.end());
                for (auto [u, v] : y.td.edges) z.td.edges.emplace_back(u + off, v + off);
                z.td.edges.emplace_back(bx, by + off);
                z.tag = x.tag + "+" + y.tag;
                next.push_back(std::move(z));
            }
        acc = std::move(next);
        first = false;
    }
    return acc;
}

}  // namespace

FullEncoding encode_edge(const HostGraph& G) {
    if (G.pattern().n() != 2 || G.pattern().m() != 1) throw InputError("encode_edge: pattern is not an edge");
    return edge_impl(G);
}

FullEncoding encode_cycle(const HostGraph& G, const std::vector<int>& order) {
    const int k = static_cast<int>(order.size());
    if (k < 3 || G.pattern().n() != k || G.pattern().m() != k) throw InputError("encode_cycle: pattern is not a cycle");
    for (int i = 0; i < k; ++i)
        if (!G.pattern().has_edge(order[i], order[(i + 1) % k])) throw InputError("encode_cycle: bad cycle order");
    if (k % 2 == 0) return cycle_even(G, order);
    Pattern big = patterns::cycle(k + 1);
    std::vector<std::vector<int>> sets(k);
    for (int j = 0; j < k; ++j) sets[order[j]] = {j};
    sets[order[k - 1]] = {k - 1, k};
    MinorLift L = lift_host_via_minor(big, G, sets);
    std::vector<int> d(k + 1);
    std::iota(d.begin(), d.end(), 0);
    return lower_encoding(cycle_even(L.host, d), L, k);
}

FullEncoding encode_biclique(const HostGraph& G, int hub1, int hub2, const std::vector<int>& side) {
    const int k = static_cast<int>(side.size());
    if (k < 2 || G.pattern().n() != k + 2 || G.pattern().m() != 2 * k) throw InputError("encode_biclique: bad pattern");
    DegreeProfile prof = degree_split(G, Rational(1, k), 2);
    return run(G, prof, [&](Branch& br, const Ctx& ctx, std::vector<PartialEncoding>& out) {
        for (int h : {hub1, hub2})
            if (br.big(h)) {
                br.freeze();
                PartialMaker pm(h == hub1 ? "biclique/1" : "biclique/1'");
                star_plus_tree(pm, ctx, {h}, nullptr);
                out.push_back(pm.finish());
                return;
            }
        br.freeze();
        PartialMaker pm("biclique/2");
        int b1 = pm.bag(ctx.path(concat({{hub1}, side})));
        int b2 = pm.bag(ctx.path(concat({{hub2}, side})));
        pm.link(b1, b2);
        out.push_back(pm.finish());
    });
}

FullEncoding encode_pa2c(const HostGraph& G, const std::vector<int>& a, const std::vector<int>& c) {
    const int al = static_cast<int>(a.size()) - 1;
    const int gam = static_cast<int>(c.size());
    if (al < 3 || gam < 2) throw InputError("encode_pa2c: needs a path of length >= 3 and two or more middles");
    if (al % 2 == 0) return pa2c_even(G, a, c);
    // contract the first edge of a path one longer
    Pattern big;
    for (int i = 0; i <= al + 1; ++i) big.add_node("a" + std::to_string(i));
    for (int j = 0; j < gam; ++j) big.add_node("c" + std::to_string(j + 1));
    for (int i = 0; i <= al; ++i) big.add_edge(i, i + 1);
    for (int j = 0; j < gam; ++j) big.add_edge(al + 2 + j, 0), big.add_edge(al + 2 + j, al + 1);
    std::vector<std::vector<int>> sets(G.pattern().n());
    sets[a[0]] = {0, 1};
    for (int i = 1; i <= al; ++i) sets[a[i]] = {i + 1};
    for (int j = 0; j < gam; ++j) sets[c[j]] = {al + 2 + j};
    MinorLift L = lift_host_via_minor(big, G, sets);
    std::vector<int> ba(al + 2), bc(gam);
    std::iota(ba.begin(), ba.end(), 0);
    std::iota(bc.begin(), bc.end(), al + 2);
    return lower_encoding(pa2c_even(L.host, ba, bc), L, G.pattern().n());
}

FullEncoding encode_pabc(const HostGraph& G, const Roles& roles) {
    const PTriple& t = roles.triple;
    if (t.beta < 3 || t.alpha < t.beta || t.gamma < 1) throw InputError("encode_pabc: triple out of range");
    return pabc_impl(G, PabcRoles{roles.a, roles.b, roles.c}, savings(t));
}

PartialEncoding biased_cycle(const HostGraph& G, const std::vector<int>& d, const Relation& red, Rational f, int ell) {
    const Pattern& H = G.pattern();
    const int k = static_cast<int>(d.size()) - 1;
    if (k < 2 || H.n() != k + 1 || H.m() != k) throw InputError("biased_cycle: pattern must be the path d");
    for (int i = 0; i < k; ++i)
        if (!H.has_edge(d[i], d[i + 1])) throw InputError("biased_cycle: d is not a path");
    std::vector<int> ends{d[0], d[k]};
    std::sort(ends.begin(), ends.end());
    if (red.attrs != ends) throw InputError("biased_cycle: red relation must be over the two ends");
    DegreeProfile prof = degree_split(G, f, 2);
    Guard g{std::vector<int>(H.n(), 2), std::vector<int>(H.n(), 1)};
    for (int x = 0; x < H.n(); ++x)
        for (int v : G.part(x)) g.lo[x] = std::min(g.lo[x], prof.cls[v]), g.hi[x] = std::max(g.hi[x], prof.cls[v]);
    for (int x = 0; x < H.n(); ++x)
        if (g.lo[x] > g.hi[x]) g.lo[x] = g.hi[x] = 1;  // empty part
    Branch br(g);
    BcPlan plan;
    try {
        plan = bc_decide(br, d, ell);
    } catch (const SplitRequest& s) {
        throw InputError("biased_cycle: part " + H.label(s.node) + " mixes degree classes");
    }
    br.freeze();
    Ctx ctx(G, prof, g);
    PartialMaker pm("biased-cycle/" + std::to_string(plan.kind));
    auto r = std::make_shared<Relation>(red);
    r->sort_unique();
    int rb = pm.bag(r);
    bc_build(pm, ctx, plan, r, rb);
    return pm.finish();
}

FullEncoding encode_piece(const HostGraph& G) {
    const Pattern& H = G.pattern();
    if (H.n() == 1) {
        DegreeProfile prof = degree_split(G, Rational(1), 1);
        PartialEncoding p;
        p.tag = "node";
        auto r = std::make_shared<Relation>();
        r->attrs = {0};
        r->data = G.part(0);
        p.td.bags.push_back({0});
        p.sub.push_back(r);
        FullEncoding e;
        if (r->size()) e.partials.push_back(std::move(p));
        return e;
    }
    auto roles = assign_roles(H);
    if (!roles) throw HardPattern("piece is not from the simple family");
    const PTriple t = roles->triple;
    if (t == PTriple{1, 0, 0}) return encode_edge(G);
    if (t == PTriple{2, 1, 0}) return encode_cycle(G, roles->a);
    if (t.beta == 2 && t.gamma == 0) return encode_cycle(G, concat({roles->a, {roles->b[1]}}));
    if (t.alpha == 2 && t.beta == 2)
        return encode_biclique(G, roles->a[0], roles->a[2], concat({{roles->a[1], roles->b[1]}, roles->c}));
    if (t.beta == 2) return encode_pa2c(G, roles->a, concat({{roles->b[1]}, roles->c}));
    return encode_pabc(G, *roles);
}

FullEncoding encode(const HostGraph& G) {
    Verdict v = classify(G.pattern());
    if (!v.subquadratic) throw HardPattern("pattern is quadratic-hard");
    return FullEncoding{encode_split(G, split_tree(G.pattern()))};
}

}  // namespace subiso
