#pragma once

#include <map>
#include <string>
#include <vector>

#include "subiso/classifier.hpp"
#include "subiso/degree.hpp"
#include "subiso/host.hpp"

namespace subiso {

// Clique nodes are interchangeable, so an embedding is a multiset of node sets of H.
// images is kept sorted; each image is a sorted node list.
struct CliqueEmbedding {
    std::vector<std::vector<int>> images;
    int k() const { return static_cast<int>(images.size()); }
    void normalize();
};

bool images_touch(const Pattern& H, const std::vector<int>& x, const std::vector<int>& y);
// Empty string when valid, otherwise the first violation.
std::string embedding_error(const Pattern& H, const CliqueEmbedding& psi);
bool validate(const Pattern& H, const CliqueEmbedding& psi);
// Max over edges of the number of images meeting the edge. Throws InputError on an invalid embedding.
int weak_edge_depth(const Pattern& H, const CliqueEmbedding& psi);

// Image of psi (an embedding into the induced minor Hp) under the branch sets of Hp in H.
CliqueEmbedding lift_embedding(const Pattern& H, const Pattern& Hp, const std::vector<std::vector<int>>& branch_sets,
                               const CliqueEmbedding& psi);

struct LowerBound {
    Pattern pattern;  // the pattern the embedding lives in
    CliqueEmbedding psi;
    std::string how;  // construction name, plus the minor it was built on when shifted
};

CliqueEmbedding goggles_embedding();  // into patterns::goggles()

// P(alpha, gamma x 2) as patterns::p_triple(alpha, 0, gamma); alpha odd >= 3, gamma >= 2.
LowerBound build_embedding_pa2c(int alpha, int gamma);

// The three parameterized constructions on p_triple(alpha, beta, gamma), each using 2X-1 clique nodes
// with weak edge depth X. Each throws InputError outside its parameter range.
//   odd_wide:   alpha >= beta >= 5, alpha + beta odd
//   odd_narrow: alpha >= beta >= 3, alpha + beta odd
//   even:       alpha >= beta >= 3, alpha + beta even
enum class PabcConstruction { OddWide, OddNarrow, Even };
LowerBound build_pabc_construction(PabcConstruction which, int alpha, int beta, int gamma);
// The X each construction reaches.
Rational pabc_construction_value(PabcConstruction which, int alpha, int beta, int gamma);

// alpha >= beta >= 3, gamma >= 1: dispatch on the savings case, building on a shifted induced minor
// when needed and lifting back. Result lives in p_triple(alpha, beta, gamma), ratio 2 - 1/savings.
LowerBound build_embedding_pabc(int alpha, int beta, int gamma);

// Any triple of the simple family. Edge and triangle get explicit embeddings; longer cycles and
// two-hub bicliques go through clemb_search (so only small ones are supported).
LowerBound build_embedding_for_triple(const PTriple& t);

struct ClembResult {
    Rational ratio{0};
    CliqueEmbedding best;
};
// Exhaustive: max of k / wed over 3 <= k <= k_max and all multisets of connected node sets.
// |V(H)| <= 8 and k_max <= 10.
ClembResult clemb_search(const Pattern& H, int k_max);

// Host for H whose H-subgraphs are in weight-preserving bijection with the k-cliques of a
// k-partite instance (a host for patterns::complete(k)).
struct CliqueReduction {
    HostGraph host;
    CliqueEmbedding psi;
    std::vector<std::vector<int>> embedded;  // per H node: clique nodes whose image contains it
    std::vector<std::map<std::vector<int>, int>> node_of;  // per H node: instance nodes of embedded[a] -> host node
    std::vector<std::vector<int>> code;     // host node -> its key in node_of
    std::vector<std::pair<int, int>> charged_edge;  // per clique edge (i<j, lexicographic): the H edge carrying its weight
    Tuple forward(const Tuple& clique) const;
    Tuple backward(const Tuple& t) const;
};
CliqueReduction reduce_clique_to_host(const Pattern& H, const CliqueEmbedding& psi, const HostGraph& clique_host);

}  // namespace subiso
