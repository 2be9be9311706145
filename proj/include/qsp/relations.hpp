#pragma once

#include "qsp/coideal.hpp"

#include <string>
#include <vector>

namespace qsp {

// An identity lhs = rhs stored as the difference lhs - rhs.
struct NamedIdentity {
    std::string name;
    Element diff;
};

// Defining relations: D-commutations, inverses, [B1,B-1] = [Khat;0], [B0,D] = 0, Serre.
std::vector<NamedIdentity> presentation_relations();
std::vector<NamedIdentity> serre_relations();
// B1X = q^-1 XB1, [B0,X]_q = B1, [X,Y] = -q^-1[Khat;0], ...
std::vector<NamedIdentity> commutation_relations();
// D and Khat against B±1, X, Y
std::vector<NamedIdentity> easy_commutations();
// Z and W against the other generators, and W through Z
std::vector<NamedIdentity> mpi_relations();
// commutativity of the Cartan part
std::vector<NamedIdentity> cartan_relations();
// Khat against the magical operators and their pairwise commutations, eta symbolic (mu)
std::vector<NamedIdentity> magical_khat_relations();

// suite names: presentation, serre, commutation, easycomm, mpi, csa, magical, all
std::vector<NamedIdentity> relation_suite(const std::string& name);
std::vector<std::string> relation_suite_names();

// Magical operators E±(eta) = B1 ± eta^{±1} X, F±(eta) = B-1 ∓ eta^{∓1} Y
Element magical_E(int sign, const Scalar& eta);
Element magical_F(int sign, const Scalar& eta);

}  // namespace qsp
