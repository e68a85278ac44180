#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subiso/degree.hpp"
#include "subiso/pattern.hpp"

namespace subiso {

struct PTriple {
    int alpha = 0, beta = 0, gamma = 0;
    auto operator<=>(const PTriple&) const = default;
};

bool in_p_prime(const PTriple& t);

// Hubs and hub-to-hub paths of a P-graph. Each path lists nodes from hub s to hub t inclusive.
struct PShape {
    int s = -1, t = -1;
    std::vector<std::vector<int>> paths;
    std::vector<int> lengths() const;  // sorted ascending
};

std::optional<PShape> recognize_p_shape(const Pattern& H);
std::optional<std::vector<int>> recognize_p_graph(const Pattern& H);
std::optional<PTriple> canonical_triple(std::vector<int> lengths);

// Pattern nodes playing each role of P(alpha, beta, gamma x 2).
// a[0..alpha]; b[0..beta] with b[0] = a[0], b[beta] = a[alpha] (empty when beta < 2); c[0..gamma-1].
struct Roles {
    PTriple triple;
    std::vector<int> a, b, c;
};
std::optional<Roles> assign_roles(const Pattern& H);

// Which of the eight defining cases applies (1-based); throws when none or several apply.
int savings_case(const PTriple& t);
Rational savings_exact(const PTriple& t);
int savings(const PTriple& t);
// The three-polynomial form.
Rational savings_alternative(const PTriple& t);
Rational f2(Rational a, Rational b, Rational g);
Rational f4(Rational a, Rational b, Rational g);
Rational f5(Rational a, Rational b, Rational g);

struct PieceReport {
    std::vector<int> nodes;
    std::optional<PTriple> triple;
    std::optional<int> F;
};

struct Verdict {
    bool subquadratic = false;
    int k = 0;  // c = 2 - 1/k when subquadratic
    std::vector<PieceReport> pieces;
    std::optional<std::vector<int>> hard_witness;
    std::string c_string() const;
    Rational c() const { return Rational(2) - Rational(1, k); }
};

Verdict classify(const Pattern& H);

}  // namespace subiso
