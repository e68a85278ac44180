#pragma once

#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "subiso/degree.hpp"
#include "subiso/encoding.hpp"

namespace subiso {

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
        for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

using RelPtr = std::shared_ptr<const Relation>;

// Key tuple -> list of value tuples, both laid out in the given attribute orders.
struct Dict {
    std::vector<int> keys, outs;
    std::unordered_map<std::vector<int>, std::vector<int>, VecHash> map;  // value lists are flattened
    std::size_t count(const std::vector<int>& key) const;
};

// Groups rows of r by their projection onto keys.
Dict build_dict(const Relation& r, const std::vector<int>& keys, const std::vector<int>& outs);
// Keys with at least `threshold` values (hi) or fewer (lo).
Relation dict_keys(const Dict& d, std::uint64_t threshold, bool hi);
Dict dict_filter(const Dict& d, std::uint64_t threshold, bool hi);

struct Step {
    int node = -1;             // extend by one pattern node
    const Dict* dict = nullptr;  // or look up dict->outs from dict->keys
};

// Materialization plan for one bag: seed rows (optional), then steps in order.
struct Plan {
    RelPtr seed;
    std::vector<int> seed_attrs;  // subset of seed->attrs; projected and deduplicated first
    std::vector<Step> steps;
};

// Per-node class interval [lo, hi] (1-based degree classes).
struct Guard {
    std::vector<int> lo, hi;
};

// Host filtered by a guard: only nodes whose degree class lies inside their part's interval survive.
class Ctx {
public:
    Ctx(const HostGraph& G, const DegreeProfile& prof, const Guard& g);
    const HostGraph& host() const { return G_; }
    const Pattern& pattern() const { return G_.pattern(); }
    const DegreeProfile& profile() const { return prof_; }
    bool ok(int v) const { return ok_[v] != 0; }
    const std::vector<int>& part(int x) const { return part_[x]; }
    bool any_empty() const;

    RelPtr run(const Plan& plan) const;
    // Bag = the seed's nodes plus one node per step.
    RelPtr extend(RelPtr seed, const std::vector<int>& seed_attrs, const std::vector<int>& order) const;
    RelPtr path(const std::vector<int>& order) const { return extend(nullptr, {}, order); }

private:
    const HostGraph& G_;
    const DegreeProfile& prof_;
    std::vector<char> ok_;
    std::vector<std::vector<int>> part_;
};

// A partial encoding under construction.
class PartialMaker {
public:
    explicit PartialMaker(std::string tag) { pe_.tag = std::move(tag); }
    int bag(RelPtr r);
    void link(int x, int y) { pe_.td.edges.emplace_back(x, y); }
    const Relation& rel(int b) const { return *pe_.sub[b]; }
    RelPtr ptr(int b) const { return pe_.sub[b]; }
    int size() const { return static_cast<int>(pe_.sub.size()); }
    void note(const std::string& s) { pe_.tag += s; }
    PartialEncoding finish() { return std::move(pe_); }

private:
    PartialEncoding pe_;
};

// Thrown by Branch when a query cannot be answered by the current guard.
struct SplitRequest {
    int node;
    int threshold;  // split into [lo, t-1] and [t, hi]
};

class Branch {
public:
    explicit Branch(const Guard& g) : g_(g) {}
    // Is the class of x at least t?
    bool ge(int x, int t);
    bool big(int x) { return ge(x, 2); }
    int lo(int x) const { return g_.lo[x]; }
    int hi(int x) const { return g_.hi[x]; }
    const Guard& guard() const { return g_; }
    // Once frozen every query must already be decided (catches queries issued mid-build).
    void freeze() { frozen_ = true; }

private:
    Guard g_;
    bool frozen_ = false;
};

using CaseFn = std::function<void(Branch&, const Ctx&, std::vector<PartialEncoding>&)>;

// Lazily refines class guards until `fn` runs without asking an undecided question.
// Leaves whose filtered host is empty or fails arc consistency are skipped, as are
// partials with an empty bag.
std::vector<PartialEncoding> run_cases(const HostGraph& G, const DegreeProfile& prof, const CaseFn& fn);

// Tree decomposition made of center ∪ {u, v} for every edge of the tree H - center,
// each bag materialized from `seed` (rows over seed_attrs, a subset of center; empty seed_attrs means all of it).
// Center nodes outside the seed are enumerated first. A null seed enumerates the whole center.
void star_plus_tree(PartialMaker& pm, const Ctx& ctx, const std::vector<int>& center, RelPtr seed,
                    std::vector<int> seed_attrs = {});

std::vector<int> concat(std::initializer_list<std::vector<int>> parts);

}  // namespace subiso
