#include "qsp/cli.hpp"

#include "qsp/center.hpp"
#include "qsp/parse.hpp"
#include "qsp/relations.hpp"
#include "qsp/tensor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <regex>

namespace qsp {

using json = nlohmann::ordered_json;

namespace {

// thrown for parameter problems found after option parsing
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json weight_json(const Weight& w) {
    json j{{"Dd", w.dd.str()}, {"D1", w.d1.str()}, {"B0", w.b0.str()}, {"Z", w.z.str()}};
    j["W"] = w.w ? json(w.w->str()) : json(nullptr);
    return j;
}

std::string weight_text(const Weight& w) {
    return "(Dd " + w.dd.str() + ", D1 " + w.d1.str() + ", B0 " + w.b0.str() + ", Z " + w.z.str() +
           (w.w ? ", W " + w.w->str() : std::string()) + ")";
}

json bp_json(const Bipartition& bp) {
    return {{"lambda", {bp.l1, bp.l2}}, {"mu", {bp.m1, bp.m2}}};
}

json hw_json(const HighestWeight& hw) {
    json j{{"kd", hw.kd}, {"k1", hw.k1}, {"beta", hw.beta.str()}, {"zeta", hw.zeta.str()}};
    j["mu"] = hw.mu ? json(hw.mu->str()) : json(nullptr);
    return j;
}

Bipartition make_bp(std::vector<int> lam, std::vector<int> mu) {
    lam.resize(2, 0);
    mu.resize(2, 0);
    Bipartition bp{lam[0], lam[1], mu[0], mu[1]};
    if (!bp.valid()) throw UsageError("not a two-row bipartition: " + bp.str());
    return bp;
}

int env_depth_bound() {
    const char* s = std::getenv("QSP_MAX_DEPTH");
    if (!s) return 16;
    try {
        int v = std::stoi(s);
        if (v < 1) throw UsageError("QSP_MAX_DEPTH must be positive");
        return v;
    } catch (const std::logic_error&) {
        throw UsageError(std::string("QSP_MAX_DEPTH is not an integer: ") + s);
    }
}

// ---------------------------------------------------------------- subcommands

int cmd_nf(const std::string& expr, bool as_json, std::ostream& out) {
    Element el = parse_element(expr);
    PBWElement nf = normal_form(el);
    if (!as_json) {
        out << nf.str() << "\n";
        return kExitOk;
    }
    json terms = json::array();
    for (auto it = nf.terms().rbegin(); it != nf.terms().rend(); ++it) {
        const auto& idx = it->first;
        terms.push_back({{"index",
                          {{"f", idx.f()}, {"y", idx.y()}, {"e", idx.e()}, {"x", idx.x()}, {"b", idx.b()},
                           {"z", idx.z()}, {"kd", idx.kd()}, {"k1", idx.k1()}}},
                         {"coeff", it->second.str()}});
    }
    out << json{{"input", expr}, {"normal_form", nf.str()}, {"terms", terms}}.dump(2) << "\n";
    return kExitOk;
}

int cmd_relcheck(const std::string& suite, bool as_json, std::ostream& out) {
    const auto names = relation_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) throw UsageError("unknown relation suite: " + suite);
    json results = json::array();
    int failed = 0;
    const auto ids = relation_suite(suite);
    for (const auto& id : ids) {
        bool ok = check_identity(id.diff);
        failed += !ok;
        if (as_json) results.push_back({{"name", id.name}, {"pass", ok}});
        else out << (ok ? "PASS " : "FAIL ") << id.name << "\n";
    }
    if (as_json) out << json{{"suite", suite}, {"results", results}, {"failed", failed}}.dump(2) << "\n";
    else out << suite << ": " << ids.size() << " identities, " << failed << " failed\n";
    return failed ? kExitVerifyFail : kExitOk;
}

struct VermaOpts {
    int kd = 0, k1 = 0;
    std::optional<int> n;
    std::string mu, zeta;
    std::vector<int> table;
    bool fd = false, bgg = false;
};

int cmd_verma(const VermaOpts& o, bool as_json, std::ostream& out) {
    if (o.n && !o.mu.empty()) throw UsageError("give either --n or --mu");
    Scalar mu = o.n ? Scalar::q(*o.n) : o.mu.empty() ? Scalar::q(0) : parse_mu_spec(o.mu);
    HighestWeight hw = HighestWeight::from_mu(o.kd, o.k1, mu, parse_zeta_spec(o.zeta, mu, o.kd - o.k1));
    auto dom = dominance_index(hw);
    json j{{"highest_weight", hw_json(hw)}, {"good", hw.is_good()}};
    j["dominant_i"] = dom ? json(*dom) : json(nullptr);
    if (!as_json) {
        out << hw.str() << "\n  good: " << (hw.is_good() ? "yes" : "no")
            << "\n  dominant: " << (dom ? "i = " + std::to_string(*dom) : std::string("no")) << "\n";
    }
    if (!o.table.empty()) {
        if (o.table.size() != 2 || o.table[0] < 0 || o.table[1] < 0 || o.table[0] > 12 || o.table[1] > 12)
            throw UsageError("--table needs A,B with 0 <= A,B <= 12");
        if (!hw.is_good()) throw UsageError("weight tables need a good Verma module");
        json rows = json::array();
        for (const auto& [ab, w] : weight_table(hw, o.table[0], o.table[1])) {
            if (as_json) rows.push_back({{"a", ab.first}, {"b", ab.second}, {"weight", weight_json(w)}});
            else out << "  F+^" << ab.first << " F-^" << ab.second << " v: " << weight_text(w) << "\n";
        }
        j["weight_table"] = rows;
    }
    if (o.fd) {
        auto L = hw.is_good() ? fd_quotient(hw) : std::nullopt;
        if (!L) {
            j["fd_quotient"] = nullptr;
            if (!as_json) out << "  finite-dimensional quotient: none\n";
        } else {
            json labels = json::array();
            for (auto [a, b] : L->labels) labels.push_back({a, b});
            j["fd_quotient"] = {{"dim", L->dim}, {"i", L->i}, {"basis", labels}};
            if (!as_json) out << "  finite-dimensional quotient: dim " << L->dim << " (i = " << L->i << ")\n";
        }
    }
    if (o.bgg) {
        if (!dom || !hw.is_good()) throw UsageError("BGG data needs a good dominant highest weight");
        BGGResolution r = bgg_resolution(hw);
        j["bgg"] = {{"left", hw_json(r.left)},
                    {"mid_plus", hw_json(r.mid_plus)},
                    {"mid_minus", hw_json(r.mid_minus)},
                    {"top", hw_json(r.top)},
                    {"image_plus", r.image_plus.str()},
                    {"image_minus", r.image_minus.str()},
                    {"image_left", r.image_left.str()}};
        if (!as_json) {
            out << "  BGG: " << r.left.str() << " -> " << r.mid_plus.str() << " + " << r.mid_minus.str() << " -> "
                << r.top.str() << "\n";
            out << "    F+ image: " << r.image_plus.str() << "\n    F- image: " << r.image_minus.str()
                << "\n    left image: " << r.image_left.str() << "\n";
        }
    }
    if (as_json) out << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_tensor(int d, bool as_json, std::ostream& out) {
    if (d < 0 || d > 6) throw UsageError("--d must be in 0..6");
    Decomposition dec = decompose(d);
    json rows = json::array();
    for (const auto& e : dec.entries) {
        json jm = json::array();
        for (const auto& s : e.jm_spectrum) jm.push_back(s.str());
        json row = bp_json(e.bp);
        row["dimL"] = e.dim_l;
        row["dimSpecht"] = e.dim_specht;
        row["weight"] = e.weight ? weight_json(*e.weight) : json(nullptr);
        row["jm_spectrum"] = jm;
        row["maximal"] = e.maximal;
        row["weight_ok"] = e.weight_ok;
        row["jm_ok"] = e.jm_ok;
        rows.push_back(row);
        if (!as_json) {
            out << e.bp.str() << ": dimL " << e.dim_l << ", dimSpecht " << e.dim_specht
                << (e.maximal && e.weight_ok && e.jm_ok ? "" : "  [check failed]") << "\n";
        }
    }
    if (as_json) out << json{{"d", d}, {"summands", rows}, {"total", dec.total}, {"ok", dec.ok()}}.dump(2) << "\n";
    else out << "total " << dec.total << " = 4^" << d << (dec.ok() ? "" : "  [FAILED]") << "\n";
    return dec.ok() ? kExitOk : kExitVerifyFail;
}

int cmd_cg(const Bipartition& bp, bool as_json, std::ostream& out) {
    if (bp.size() > 6) throw UsageError("cg supports |lambda|+|mu| <= 6");
    CGResult r = clebsch_gordan(bp);
    json cands = json::array();
    if (!as_json) out << "L" << bp.str() << " (dim " << r.module.dim << ") (x) V:\n";
    for (const auto& c : r.candidates) {
        json jc{{"name", c.name},     {"target", bp_json(c.target)}, {"target_valid", c.target_valid},
                {"zero", c.vec.is_zero()}, {"maximal", c.maximal}};
        jc["weight"] = c.weight ? weight_json(*c.weight) : json(nullptr);
        jc["expected_Z"] = c.expected_z.str();
        jc["weight_ok"] = c.weight_ok;
        cands.push_back(jc);
        if (!as_json) {
            out << "  " << c.name << " -> L" << c.target.str() << ": ";
            if (c.vec.is_zero()) out << "zero" << (c.target_valid ? "  [unexpected]" : "") << "\n";
            else
                out << (c.maximal ? "maximal" : "NOT maximal") << ", Z " << (c.weight ? c.weight->z.str() : "?")
                    << (c.weight_ok ? "" : "  [weight mismatch]") << "\n";
        }
    }
    if (as_json)
        out << json{{"bipartition", bp_json(bp)}, {"dimL", r.module.dim}, {"candidates", cands},
                    {"dim_sum", r.dim_sum}, {"ok", r.ok()}}
                   .dump(2)
            << "\n";
    else out << "  summand dimensions " << r.dim_sum << " vs 4*dimL " << 4 * r.module.dim << (r.ok() ? "" : "  [FAILED]") << "\n";
    return r.ok() ? kExitOk : kExitVerifyFail;
}

int cmd_center(int max_size, bool as_json, std::ostream& out) {
    if (max_size < 0 || max_size > 5) throw UsageError("--max-size must be in 0..5");
    bool ok = true;
    json els = json::array();
    for (const auto& e : central_elements()) {
        bool central = is_central(e.body);
        CartanElement xi = hc_project(e.body);
        bool fixed = w_gl2(xi) == xi;
        ok = ok && central && fixed;
        els.push_back({{"name", e.name}, {"central", central}, {"hc_image", xi.str()}, {"w_gl2_fixed", fixed}});
        if (!as_json)
            out << e.name << ": " << (central ? "central" : "NOT central") << "; xi = " << xi.str()
                << (fixed ? "" : "  [not W_gl2-fixed]") << "\n";
    }
    WsReport ws = ws_extended_check();
    ok = ok && ws.ok();
    if (!as_json) out << "W_s: " << (ws.ok() ? "involution fixing xi(det), xi(C1), xi(C2), xi(C3)" : "FAILED") << "\n";
    json mods = json::array();
    std::vector<CentralCharacter> seen;
    for (int d = 0; d <= max_size; ++d)
        for (const auto& bp : two_row_bipartitions(d)) {
            CentralCharacter c = central_character(bp);
            auto L = fd_quotient(bipartition_hw(bp));
            bool match = L && character_matches_module(*L, c);
            ok = ok && match;
            seen.push_back(c);
            json row = bp_json(bp);
            row["character"] = {{"C1", c.c1.str()}, {"C2", c.c2.str()}, {"C3", c.c3.str()}, {"det", c.det.str()}};
            row["matches_action"] = match;
            mods.push_back(row);
            if (!as_json) out << "L" << bp.str() << ": " << c.str() << (match ? "" : "  [action mismatch]") << "\n";
        }
    bool distinct = true;
    for (std::size_t a = 0; a < seen.size(); ++a)
        for (std::size_t b = a + 1; b < seen.size(); ++b)
            if (seen[a] == seen[b]) distinct = false;
    ok = ok && distinct;
    if (as_json)
        out << json{{"elements", els}, {"ws_ok", ws.ok()}, {"modules", mods}, {"characters_distinct", distinct}, {"ok", ok}}
                   .dump(2)
            << "\n";
    else out << "characters pairwise distinct: " << (distinct ? "yes" : "NO") << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_probe(int kappa, int n, std::optional<int> depth, bool as_json, std::ostream& out) {
    if (kappa < 0 || kappa > 8) throw UsageError("--kappa must be in 0..8");
    if (n < -10 || n > 10) throw UsageError("--n must be in -10..10");
    const int bound = env_depth_bound();
    int dep = depth.value_or(std::min(10, bound));
    if (dep < 1 || dep > bound) throw UsageError("--depth must be in 1.." + std::to_string(bound) + " (QSP_MAX_DEPTH)");
    json rows = json::array();
    if (!as_json) out << "experimental: radical quotients up to depth " << dep << "\n";
    for (const auto& e : exceptional_probe(kappa, n, dep)) {
        json dims = json::array();
        for (auto d : e.report.level_dims) dims.push_back(d);
        rows.push_back({{"j", e.j},
                        {"zeta", e.zeta.str()},
                        {"status", e.report.finite ? "finite" : "inconclusive"},
                        {"finite", e.report.finite},
                        {"level_dims", dims},
                        {"sl2_character", e.report.finite ? json(e.report.character_str()) : json(nullptr)}});
        if (!as_json)
            out << "j=" << e.j << " zeta=" << e.zeta.str() << ": "
                << (e.report.finite ? e.report.character_str()
                                    : "inconclusive, no finite quotient up to depth " + std::to_string(dep))
                << "\n";
    }
    if (as_json) out << json{{"experimental", true}, {"kappa", kappa}, {"n", n}, {"depth", dep}, {"entries", rows}}.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

Scalar parse_mu_spec(const std::string& s) {
    static const std::regex re(R"(\s*(i\s*\*\s*)?q\s*\^\s*([+-]?\d{1,4})\s*)");
    std::smatch m;
    if (s == "mu") return Scalar::mu(1);
    if (!std::regex_match(s, m, re)) throw UsageError("mu-spec must be q^n, i*q^n or mu: '" + s + "'");
    Scalar v = Scalar::q(std::stoi(m[2].str()));
    return m[1].matched ? Scalar::iota() * v : v;
}

Scalar parse_zeta_spec(const std::string& s, const Scalar& mu, int kappa) {
    const std::string prefix = "dominant:";
    if (s.rfind(prefix, 0) == 0) {
        int i = 0;
        try {
            std::size_t used = 0;
            i = std::stoi(s.substr(prefix.size()), &used);
            if (used != s.size() - prefix.size()) throw std::invalid_argument("trailing");
        } catch (const std::logic_error&) {
            throw UsageError("bad zeta-spec: '" + s + "'");
        }
        if (i < 0 || i > kappa) throw UsageError("dominant:i needs 0 <= i <= kappa = " + std::to_string(kappa));
        return dominant_zeta(mu, kappa, i);
    }
    return parse_scalar(s);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the coideal subalgebra U_q'(gl2 x gl2) of U_q(gl4)", "qsp"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    auto* nf = app.add_subcommand("nf", "PBW normal form of an expression");
    std::string expr;
    nf->add_option("expr", expr, "expression, see docs/grammar.md")->required();
    nf->add_flag("--json", as_json, "JSON output");

    auto* rel = app.add_subcommand("relcheck", "check a named identity suite");
    std::string suite;
    rel->add_option("suite", suite, "presentation, serre, commutation, easycomm, mpi, csa, magical or all")->required();
    rel->add_flag("--json", as_json, "JSON output");

    auto* ver = app.add_subcommand("verma", "Verma module data");
    VermaOpts vo;
    ver->add_option("--kd", vo.kd, "exponent of the Dd weight")->required()->check(CLI::Range(-50, 50));
    ver->add_option("--k1", vo.k1, "exponent of the D1 weight")->required()->check(CLI::Range(-50, 50));
    ver->add_option("--n", vo.n, "mu = q^n")->check(CLI::Range(-50, 50));
    ver->add_option("--mu", vo.mu, "mu-spec: q^n, i*q^n or mu");
    ver->add_option("--zeta", vo.zeta, "zeta-spec: dominant:i or a scalar expression")->required();
    ver->add_option("--table", vo.table, "A,B: weights of F+^a F-^b v for a <= A, b <= B")->delimiter(',')->expected(2);
    ver->add_flag("--fd", vo.fd, "finite-dimensional quotient");
    ver->add_flag("--bgg", vo.bgg, "BGG resolution data");
    ver->add_flag("--json", as_json, "JSON output");

    auto* ten = app.add_subcommand("tensor", "decomposition of V^(x)d");
    int d = 0;
    ten->add_option("--d", d, "tensor power")->required();
    ten->add_flag("--json", as_json, "JSON output");

    auto* cg = app.add_subcommand("cg", "Clebsch-Gordan candidates in L(lambda,mu) (x) V");
    std::vector<int> lam, mu;
    cg->add_option("--lambda", lam, "l1,l2")->delimiter(',')->expected(1, 2);
    cg->add_option("--mu", mu, "m1,m2")->delimiter(',')->expected(1, 2);
    cg->add_flag("--json", as_json, "JSON output");

    auto* cen = app.add_subcommand("center", "central elements and central characters");
    int max_size = 2;
    cen->add_option("--max-size", max_size, "characters for bipartitions up to this size");
    cen->add_flag("--json", as_json, "JSON output");

    auto* pr = app.add_subcommand("probe", "finite quotients of exceptional Verma modules");
    int kappa = 0, n = 0;
    std::optional<int> depth;
    pr->add_option("--kappa", kappa, "kappa")->required();
    pr->add_option("--n", n, "beta = [iota q^n;0]")->required();
    pr->add_option("--depth", depth, "search depth, bounded by QSP_MAX_DEPTH");
    pr->add_flag("--json", as_json, "JSON output");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*nf) return cmd_nf(expr, as_json, out);
        if (*rel) return cmd_relcheck(suite, as_json, out);
        if (*ver) return cmd_verma(vo, as_json, out);
        if (*ten) return cmd_tensor(d, as_json, out);
        if (*cg) return cmd_cg(make_bp(lam, mu), as_json, out);
        if (*cen) return cmd_center(max_size, as_json, out);
        if (*pr) return cmd_probe(kappa, n, depth, as_json, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qsp
