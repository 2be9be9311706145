#include "qsp/relations.hpp"

#include <stdexcept>

namespace qsp {

namespace {

Element G(Gen g) { return Element(g); }
Scalar q(int e) { return Scalar::q(e); }
Element comm(const Element& a, const Element& b) { return a * b - b * a; }

}  // namespace

Element magical_E(int sign, const Scalar& eta) {
    Scalar c = sign > 0 ? eta : -eta.inverse();
    return G(Gen::B1) + gen_X() * c;
}

Element magical_F(int sign, const Scalar& eta) {
    Scalar c = sign > 0 ? -eta.inverse() : eta;
    return G(Gen::Bm1) + gen_Y() * c;
}

std::vector<NamedIdentity> serre_relations() {
    Element B0 = G(Gen::B0);
    std::vector<NamedIdentity> r;
    for (Gen g : {Gen::B1, Gen::Bm1}) {
        Element B = G(g);
        std::string s = gen_name(g);
        r.push_back({"B0^2*" + s + " - [2]B0*" + s + "*B0 + " + s + "*B0^2 = " + s,
                     B0 * B0 * B - qint(2) * (B0 * B * B0) + B * B0 * B0 - B});
        r.push_back({s + "^2*B0 - [2]" + s + "*B0*" + s + " + B0*" + s + "^2 = 0",
                     B * B * B0 - qint(2) * (B * B0 * B) + B0 * B * B});
        r.push_back({"[B0,[B0," + s + "]_q^-1]_q = " + s, qcomm(B0, qcomm(B0, B, q(-1)), q(1)) - B});
        r.push_back({"[" + s + ",[" + s + ",B0]_q^-1]_q = 0", qcomm(B, qcomm(B, B0, q(-1)), q(1))});
    }
    return r;
}

std::vector<NamedIdentity> presentation_relations() {
    Element B1 = G(Gen::B1), Bm = G(Gen::Bm1), B0 = G(Gen::B0);
    Element Dd = G(Gen::Dd), Ddi = G(Gen::DdInv), D1 = G(Gen::D1), D1i = G(Gen::D1Inv);
    std::vector<NamedIdentity> r{
        {"Dd*B1 = q B1*Dd", Dd * B1 - q(1) * (B1 * Dd)},
        {"Dd*B-1 = q^-1 B-1*Dd", Dd * Bm - q(-1) * (Bm * Dd)},
        {"D1*B1 = q^-1 B1*D1", D1 * B1 - q(-1) * (B1 * D1)},
        {"D1*B-1 = q B-1*D1", D1 * Bm - q(1) * (Bm * D1)},
        {"Dd^-1*B1 = q^-1 B1*Dd^-1", Ddi * B1 - q(-1) * (B1 * Ddi)},
        {"Dd^-1*B-1 = q B-1*Dd^-1", Ddi * Bm - q(1) * (Bm * Ddi)},
        {"D1^-1*B1 = q B1*D1^-1", D1i * B1 - q(1) * (B1 * D1i)},
        {"D1^-1*B-1 = q^-1 B-1*D1^-1", D1i * Bm - q(-1) * (Bm * D1i)},
        {"Dd*Dd^-1 = 1", Dd * Ddi - Element(1)},
        {"Dd^-1*Dd = 1", Ddi * Dd - Element(1)},
        {"D1*D1^-1 = 1", D1 * D1i - Element(1)},
        {"D1^-1*D1 = 1", D1i * D1 - Element(1)},
        {"[Dd,D1] = 0", comm(Dd, D1)},
        {"[B0,Dd] = 0", comm(B0, Dd)},
        {"[B0,D1] = 0", comm(B0, D1)},
        {"[B1,B-1] = [Khat;0]", comm(B1, Bm) - khat_bracket()},
    };
    for (auto& s : serre_relations())
        if (s.name[0] != '[') r.push_back(s);
    return r;
}

std::vector<NamedIdentity> commutation_relations() {
    Element B1 = G(Gen::B1), Bm = G(Gen::Bm1), B0 = G(Gen::B0);
    Element X = gen_X(), Y = gen_Y(), K = gen_K();
    return {
        {"B1*X = q^-1 X*B1", B1 * X - q(-1) * (X * B1)},
        {"B-1*Y = q^-1 Y*B-1", Bm * Y - q(-1) * (Y * Bm)},
        {"[B0,X]_q = B1", qcomm(B0, X, q(1)) - B1},
        {"[B0,Y]_q = B-1", qcomm(B0, Y, q(1)) - Bm},
        {"[X,Y] = -q^-1[Khat;0]", comm(X, Y) + q(-1) * khat_bracket()},
        {"Khat*X = q^2 X*Khat", K * X - q(2) * (X * K)},
        {"Khat*Y = q^-2 Y*Khat", K * Y - q(-2) * (Y * K)},
    };
}

std::vector<NamedIdentity> easy_commutations() {
    Element B1 = G(Gen::B1), Bm = G(Gen::Bm1);
    Element Dd = G(Gen::Dd), D1 = G(Gen::D1);
    Element X = gen_X(), Y = gen_Y(), K = gen_K();
    return {
        {"Dd*B1 = q B1*Dd", Dd * B1 - q(1) * (B1 * Dd)},
        {"Dd*B-1 = q^-1 B-1*Dd", Dd * Bm - q(-1) * (Bm * Dd)},
        {"D1*B1 = q^-1 B1*D1", D1 * B1 - q(-1) * (B1 * D1)},
        {"D1*B-1 = q B-1*D1", D1 * Bm - q(1) * (Bm * D1)},
        {"Dd*X = q X*Dd", Dd * X - q(1) * (X * Dd)},
        {"Dd*Y = q^-1 Y*Dd", Dd * Y - q(-1) * (Y * Dd)},
        {"D1*Y = q Y*D1", D1 * Y - q(1) * (Y * D1)},
        {"D1*X = q^-1 X*D1", D1 * X - q(-1) * (X * D1)},
        {"Khat*B1 = q^2 B1*Khat", K * B1 - q(2) * (B1 * K)},
        {"Khat*B-1 = q^-2 B-1*Khat", K * Bm - q(-2) * (Bm * K)},
        {"Khat*X = q^2 X*Khat", K * X - q(2) * (X * K)},
        {"Khat*Y = q^-2 Y*Khat", K * Y - q(-2) * (Y * K)},
    };
}

std::vector<NamedIdentity> mpi_relations() {
    Element B1 = G(Gen::B1), Bm = G(Gen::Bm1), B0 = G(Gen::B0);
    Element X = gen_X(), Y = gen_Y(), Z = gen_Z(), W = gen_W(), K = gen_K(), Ki = gen_Kinv();
    Scalar two = qint(2);
    return {
        {"[B-1,Z]_q^-1 = q^-2[2] Khat^-1 Y", qcomm(Bm, Z, q(-1)) - q(-2) * two * (Ki * Y)},
        {"[Z,B1]_q^-1 = -q^-3[2] X Khat^-1 + (q^-1 - q^-5) B1 B0 Khat^-1",
         qcomm(Z, B1, q(-1)) + q(-3) * two * (X * Ki) - (q(-1) - q(-5)) * (B1 * B0 * Ki)},
        {"[X,Z]_q = [2] Khat^-1 B1", qcomm(X, Z, q(1)) - two * (Ki * B1)},
        {"[Z,Y]_q = -q[2] B-1 Khat^-1 - (q^3 - q^-1) Y B0 Khat^-1",
         qcomm(Z, Y, q(1)) + q(1) * two * (Bm * Ki) + (q(3) - q(-1)) * (Y * B0 * Ki)},
        {"[B1,W]_q^-1 = q^-2[2] Khat X", qcomm(B1, W, q(-1)) - q(-2) * two * (K * X)},
        {"[B-1,W]_q = q^-2[2] Y Khat - (1 - q^-4) B-1 B0 Khat",
         qcomm(Bm, W, q(1)) - q(-2) * two * (Y * K) + (Scalar(1) - q(-4)) * (Bm * B0 * K)},
        {"[Y,W]_q = [2] Khat B-1", qcomm(Y, W, q(1)) - two * (K * Bm)},
        {"[X,W]_q^-1 = q^-4[2] Khat B1 + (q^-1 - q^-5) B0 Khat X",
         qcomm(X, W, q(-1)) - q(-4) * two * (K * B1) - (q(-1) - q(-5)) * (B0 * K * X)},
        {"W = q^-2 Z - q^-2(q - q^-1)[Khat;0]B0 - (q^-2 - 1)B-1 X - q^-2(q - q^-1) Y B1",
         W - q(-2) * Z + q(-2) * (q(1) - q(-1)) * (khat_bracket() * B0) + (q(-2) - Scalar(1)) * (Bm * X) +
             q(-2) * (q(1) - q(-1)) * (Y * B1)},
    };
}

std::vector<NamedIdentity> cartan_relations() {
    Element B0 = G(Gen::B0), Dd = G(Gen::Dd), D1 = G(Gen::D1);
    Element Z = gen_Z(), W = gen_W();
    return {
        {"[Dd,D1] = 0", comm(Dd, D1)},
        {"[B0,Dd] = 0", comm(B0, Dd)},
        {"[B0,D1] = 0", comm(B0, D1)},
        {"[Z,B0] = 0", comm(Z, B0)},
        {"[Dd,Z] = 0", comm(Dd, Z)},
        {"[D1,Z] = 0", comm(D1, Z)},
        {"[W,Dd] = 0", comm(W, Dd)},
        {"[W,D1] = 0", comm(W, D1)},
        {"[W,B0] = 0", comm(W, B0)},
        {"[Z,W] = 0", comm(Z, W)},
    };
}

std::vector<NamedIdentity> magical_khat_relations() {
    Element K = gen_K();
    Scalar eta = Scalar::mu();
    std::vector<NamedIdentity> r;
    for (int s : {1, -1}) {
        std::string sg = s > 0 ? "+" : "-";
        Element F = magical_F(s, eta), E = magical_E(s, eta);
        r.push_back({"F" + sg + "(eta) Khat = q^2 Khat F" + sg + "(eta)", F * K - q(2) * (K * F)});
        r.push_back({"E" + sg + "(eta) Khat = q^-2 Khat E" + sg + "(eta)", E * K - q(-2) * (K * E)});
    }
    Scalar qe = q(1) * eta, qie = q(-1) * eta;
    r.push_back({"E+(q^-1 eta) E-(eta) = E-(q eta) E+(eta)",
                 magical_E(1, qie) * magical_E(-1, eta) - magical_E(-1, qe) * magical_E(1, eta)});
    r.push_back({"F+(q eta) F-(eta) = F-(q^-1 eta) F+(eta)",
                 magical_F(1, qe) * magical_F(-1, eta) - magical_F(-1, qie) * magical_F(1, eta)});
    return r;
}

std::vector<std::string> relation_suite_names() {
    return {"presentation", "serre", "commutation", "easycomm", "mpi", "csa", "magical", "all"};
}

std::vector<NamedIdentity> relation_suite(const std::string& name) {
    if (name == "presentation") return presentation_relations();
    if (name == "serre") return serre_relations();
    if (name == "commutation") return commutation_relations();
    if (name == "easycomm") return easy_commutations();
    if (name == "mpi") return mpi_relations();
    if (name == "csa") return cartan_relations();
    if (name == "magical") return magical_khat_relations();
    if (name == "all") {
        std::vector<NamedIdentity> r;
        for (const auto& n : relation_suite_names()) {
            if (n == "all") continue;
            auto s = relation_suite(n);
            r.insert(r.end(), s.begin(), s.end());
        }
        return r;
    }
    throw std::invalid_argument("unknown relation suite: " + name);
}

}  // namespace qsp
