#include "c2q/commands.hpp"

#include "c2q/checks.hpp"
#include "c2q/error.hpp"
#include "c2q/parse.hpp"

#include <chrono>
#include <sstream>

namespace c2q {

int exit_code(Status s)
{
    switch (s) {
    case Status::Ok:
        return 0;
    case Status::Unresolved:
        return 2;
    case Status::Error:
        break;
    }
    return 1;
}

int exit_code(const std::vector<Status>& all)
{
    int code = 0;
    for (Status s : all) {
        if (s == Status::Error)
            return 1;
        if (s == Status::Unresolved)
            code = 2;
    }
    return code;
}

// ---------------------------------------------------------------- JSON views

json to_json(const Elem& e, const FieldCtx& f)
{
    return e.to_string(f);
}

json to_json(const PlaceSet& places, const FieldCtx& f)
{
    json a = json::array();
    const std::string var = f.is_rational() ? f.var() : "t";
    for (const Place& p : places)
        a.push_back(p.to_string(var));
    return a;
}

json to_json(const BrauerClass& b)
{
    json j;
    json syms = json::array();
    for (const QuatSymbol& s : b.symbols())
        syms.push_back("[" + s.alpha.to_string(b.field()) + "," + s.beta.to_string(b.field()) + ")");
    j["symbols"] = syms;
    if (b.exact()) {
        j["ramification"] = to_json(b.ramification(), b.field());
        j["split"] = b.is_trivial();
    } else {
        j["ramification"] = nullptr;
        j["split"] = nullptr;
    }
    return j;
}

json to_json(const ArfClass& a)
{
    json j;
    j["rep"] = to_json(a.rep, a.field);
    j["canonical"] = a.canonical;
    if (a.canonical || a.rep.is_zero())
        j["trivial"] = a.is_trivial();
    else
        j["trivial"] = nullptr;
    return j;
}

json to_json(const WittClass& w)
{
    json j;
    j["anisotropic_dimension"] = w.dim_anis;
    j["arf"] = to_json(w.arf);
    j["clifford"] = to_json(w.clifford);
    j["hyperbolic"] = w.dim_anis == 0;
    return j;
}

static json quats(const std::vector<Quaternion>& qs)
{
    json a = json::array();
    for (const Quaternion& q : qs)
        a.push_back(q.to_string());
    return a;
}

json to_json(const LinkageCertificate& c)
{
    json j;
    j["mode"] = to_string(c.mode);
    j["common"] = to_json(c.common, c.inputs.front().field());
    j["inputs"] = quats(c.inputs);
    j["rewritten"] = quats(c.rewritten);
    j["verified"] = c.verified;
    return j;
}

json to_json(const TightSet& t)
{
    json j;
    j["forms"] = quats(t.forms);
    json els = json::array();
    for (const GroupElement& g : t.elements) {
        json e;
        e["mask"] = g.mask;
        e["multiplicity"] = g.multiplicity;
        e["representative"] = g.rep ? json(g.rep->to_string()) : json("H + H");
        e["provenance"] = g.provenance;
        els.push_back(e);
    }
    j["elements"] = els;
    j["exact"] = t.exact;
    j["verified"] = t.verified;
    return j;
}

json to_json(const SigmaReport& s)
{
    json j;
    j["sigma"] = s.sigma_form.to_string();
    j["dim"] = s.sigma_form.dim();
    j["witt_class"] = s.witt ? to_json(*s.witt) : json(nullptr);
    j["claim"] = s.claim_text;
    j["claim_form"] = s.claim ? json(s.claim->to_string()) : json(nullptr);
    j["verdict"] = to_string(s.verdict);
    j["detail"] = s.detail;
    return j;
}

json to_json(const WitnessReport& w)
{
    json j;
    j["source"] = w.source.to_string();
    j["target"] = w.target.to_string();
    j["w"] = w.w.to_string();
    j["z"] = w.z.to_string();
    j["w_square_is_new_beta"] = w.w_square;
    j["z_artin_schreier_is_new_alpha"] = w.z_artin_schreier;
    j["w_conjugates_z_to_z_plus_1"] = w.conjugation;
    j["holds"] = w.holds();
    return j;
}

namespace {

json vec_json(const Vec& v, const FieldCtx& f)
{
    json a = json::array();
    for (const Elem& e : v)
        a.push_back(e.to_string(f));
    return a;
}

json certs_json(const std::vector<NamedCertificate>& cs)
{
    json a = json::array();
    for (const NamedCertificate& c : cs) {
        json j = to_json(c.cert);
        j["pair"] = c.name;
        a.push_back(j);
    }
    return a;
}

json pair_json(const PairConstruction& p, const FieldCtx& f)
{
    json j;
    j["psi"] = p.psi.to_string();
    j["phi"] = p.phi.to_string();
    j["phi_rewrite"] = to_json(p.phi_rewrite.witness);
    j["phi_matches_rewrite"] = p.phi_matches;
    j["linkage"] = to_json(p.linkage.cert);
    j["tight_set"] = to_json(p.tight);
    j["sigma"] = to_json(p.sigma);
    j["target"] = PfisterQ(f, {p.gamma, p.beta}, p.alpha).to_string();
    return j;
}

json triple_json(const TripleConstruction& t, const FieldCtx& f)
{
    json j;
    j["psi"] = t.psi.to_string();
    j["phi"] = t.phi.to_string();
    j["pi"] = t.pi.to_string();
    j["xi"] = t.xi.to_string();
    j["xi_rewrite"] = to_json(t.xi_rewrite.witness);
    j["xi_matches_rewrite"] = t.xi_matches;
    j["certificates"] = certs_json(t.links);
    j["certificates_verified"] = f.exact() ? json(t.links_verified) : json(nullptr);
    j["tight_set"] = to_json(t.tight);
    j["sigma"] = to_json(t.sigma);
    j["target"] = PfisterQ(f, {t.gamma, t.beta}, t.alpha).to_string();
    return j;
}

// Raised for operations that have no exact decision on the given field.
struct Unresolved {
    std::string reason;
};

class Runner {
public:
    Runner(const Command& cmd, const CommandOptions& opt, const FieldCtx& field)
        : cmd_(cmd), opt_(opt), f_(field)
    {
    }

    json input;
    Status status = Status::Ok;

    // i-th positional argument or the named option `name`
    std::string arg(std::size_t i, const std::string& name, const std::optional<std::string>& dflt = std::nullopt)
    {
        std::string v;
        if (auto it = cmd_.named.find(name); it != cmd_.named.end())
            v = it->second;
        else if (i < cmd_.positional.size())
            v = cmd_.positional[i];
        else if (dflt)
            v = *dflt;
        else
            throw Error(ErrorCode::InvalidArgument, "missing argument '" + name + "'");
        input[name] = v;
        return v;
    }
    std::string named(const std::string& name, const std::string& dflt)
    {
        return arg(static_cast<std::size_t>(-1), name, dflt);
    }
    int named_int(const std::string& name, int dflt)
    {
        const std::string v = named(name, std::to_string(dflt));
        try {
            std::size_t used = 0;
            const int n = std::stoi(v, &used);
            if (used == v.size())
                return n;
        } catch (const std::exception&) {
        }
        throw Error(ErrorCode::InvalidArgument, "option '" + name + "' expects an integer, got '" + v + "'");
    }
    Elem elem(std::size_t i, const std::string& name, const std::optional<std::string>& dflt = std::nullopt)
    {
        return parse_element(arg(i, name, dflt), f_);
    }
    QuadForm form(std::size_t i, const std::string& name) { return parse_form(arg(i, name), f_); }
    Quaternion quat(std::size_t i, const std::string& name) { return parse_quaternion(arg(i, name), f_); }
    std::vector<Quaternion> quat_list(std::size_t min)
    {
        std::vector<Quaternion> qs;
        json in = json::array();
        for (const std::string& s : cmd_.positional) {
            qs.push_back(parse_quaternion(s, f_));
            in.push_back(s);
        }
        if (qs.size() < min)
            throw Error(ErrorCode::InvalidArgument, "expected at least " + std::to_string(min) + " quaternion algebras");
        input["algebras"] = in;
        return qs;
    }
    int bound(int dflt) const { return opt_.bound >= 0 ? opt_.bound : dflt; }
    void require_exact(const std::string& what) const
    {
        if (!f_.exact())
            throw Unresolved{what + " has no exact decision over " + f_.spec()};
    }

    json run()
    {
        const std::string& g = cmd_.group;
        if (g == "form")
            return form_op();
        if (g == "quat")
            return quat_op();
        if (g == "linkage")
            return linkage_op();
        if (g == "paper")
            return paper_op();
        throw Error(ErrorCode::InvalidArgument, "unknown command group '" + g + "'");
    }

private:
    [[noreturn]] void unknown() const
    {
        throw Error(ErrorCode::InvalidArgument, "unknown operation '" + cmd_.op + "' for '" + cmd_.group + "'");
    }

    // ------------------------------------------------ form

    json form_op()
    {
        const std::string& op = cmd_.op;
        json r;
        if (op == "arf") {
            const QuadForm q = form(0, "form");
            r["form"] = q.to_string();
            r["dim"] = q.dim();
            r["arf"] = to_json(arf(q));
            return r;
        }
        if (op == "clifford") {
            const QuadForm q = form(0, "form");
            r["form"] = q.to_string();
            r["clifford"] = to_json(clifford(q));
            return r;
        }
        if (op == "isotropy") {
            const QuadForm q = form(0, "form");
            const int b = bound(8);
            r["form"] = q.to_string();
            r["bound"] = b;
            std::optional<bool> exact;
            if (f_.exact())
                exact = is_isotropic_exact(q);
            r["isotropic"] = exact ? json(*exact) : json(nullptr);
            std::optional<Vec> w = isotropy_search(q, b);
            if (w) {
                r["witness"] = vec_json(*w, f_);
                r["witness_value"] = q.evaluate(*w).to_string(f_);
            } else {
                r["witness"] = nullptr;
            }
            if (exact && *exact && !w)
                r["note"] = "isotropic, but no witness within the search bound";
            if (!exact && !w)
                status = Status::Unresolved;
            return r;
        }
        if (op == "decompose") {
            const QuadForm q = form(0, "form");
            const int b = bound(8);
            r["form"] = q.to_string();
            r["bound"] = b;
            try {
                const WittDecomposition d = witt_decompose(q, b);
                r["witt_index"] = d.witt_index;
                r["anisotropic"] = d.anisotropic.to_string();
                r["anisotropic_dim"] = d.anisotropic.dim();
                r["exact"] = d.exact;
                if (!d.exact)
                    status = Status::Unresolved;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::SearchBoundExceeded)
                    throw;
                r["unresolved"] = e.what();
                status = Status::Unresolved;
            }
            return r;
        }
        if (op == "equiv") {
            const QuadForm q1 = form(0, "form");
            const QuadForm q2 = form(1, "other");
            r["forms"] = json::array({q1.to_string(), q2.to_string()});
            if (f_.exact()) {
                r["witt_equivalent"] = witt_equivalent(q1, q2);
                r["isometric"] = is_isometric(q1, q2);
                r["grade"] = "exact";
            } else {
                const Evidence ev = witt_equivalent_evidence(q1, q2, opt_.seed);
                r["witt_equivalent"] = ev.value;
                r["isometric"] = nullptr;
                r["grade"] = "evidence";
                r["samples"] = ev.samples;
                r["skipped"] = ev.skipped;
                r["detail"] = ev.detail;
            }
            return r;
        }
        unknown();
    }

    // ------------------------------------------------ quat

    json quat_op()
    {
        const std::string& op = cmd_.op;
        json r;
        if (op == "norm") {
            const Quaternion q = quat(0, "algebra");
            const PfisterQ n = norm_form(q);
            r["algebra"] = q.to_string();
            r["norm_form"] = n.to_string();
            r["expanded"] = n.expand().to_string();
            r["coordinates"] = "(a,b,c,d) -> (a,b,c,beta*d)";
            return r;
        }
        if (op == "division") {
            const Quaternion q = quat(0, "algebra");
            require_exact("splitting");
            r["algebra"] = q.to_string();
            r["division"] = is_division(q);
            r["ramification"] = to_json(brauer_class(q).ramification(), f_);
            return r;
        }
        if (op == "ramify") {
            const Quaternion q = quat(0, "algebra");
            require_exact("ramification");
            r["algebra"] = q.to_string();
            if (f_.kind() == FieldCtx::Kind::Finite) {
                r["ramification"] = json::array();
                r["symbols"] = json::array();
                r["reciprocity"] = true;
                return r;
            }
            const SymbolTable t = symbol_table(q.alpha().rat(), q.beta().rat());
            r["ramification"] = to_json(t.ramification, f_);
            json syms = json::array();
            for (const auto& [p, v] : t.entries)
                syms.push_back(json{{"place", p.to_string(f_.var())}, {"symbol", v}});
            r["symbols"] = syms;
            r["reciprocity"] = t.reciprocity;
            return r;
        }
        if (op == "iso") {
            const Quaternion q1 = quat(0, "algebra");
            const Quaternion q2 = quat(1, "other");
            require_exact("isomorphism");
            r["algebras"] = quats({q1, q2});
            r["isomorphic"] = is_isomorphic(q1, q2);
            r["ramification"] = json::array(
                {to_json(brauer_class(q1).ramification(), f_), to_json(brauer_class(q2).ramification(), f_)});
            return r;
        }
        if (op == "mul") {
            const Quaternion q1 = quat(0, "algebra");
            const Quaternion q2 = quat(1, "other");
            const Quaternion p = brauer_mul_same_alpha(q1, q2);
            r["algebras"] = quats({q1, q2});
            r["product"] = p.to_string();
            if (f_.exact()) {
                r["reduced"] = reduce_right_slot(p).to_string();
                r["additive"] = brauer_class(q1) + brauer_class(q2) == brauer_class(p);
                r["ramification"] = to_json(brauer_class(p).ramification(), f_);
            }
            return r;
        }
        unknown();
    }

    // ------------------------------------------------ linkage

    json linkage_op()
    {
        const std::string& op = cmd_.op;
        json r;
        if (op == "pair") {
            const std::vector<Quaternion> qs = quat_list(2);
            if (qs.size() != 2)
                throw Error(ErrorCode::InvalidArgument, "pair linkage takes two algebras");
            require_exact("the linkage search");
            const int b = bound(4);
            const std::string mode = named("mode", "any");
            r["bound"] = b;
            json found = json::array();
            for (LinkMode m : {LinkMode::Separable, LinkMode::Inseparable}) {
                if (mode != "any" && mode != to_string(m))
                    continue;
                if (auto c = pair_linkage(qs[0], qs[1], m, b))
                    found.push_back(to_json(*c));
            }
            if (mode != "any" && mode != "separable" && mode != "inseparable")
                throw Error(ErrorCode::InvalidArgument, "mode must be separable, inseparable or any");
            r["certificates"] = found;
            if (found.empty())
                status = Status::Unresolved;
            return r;
        }
        if (op == "triple") {
            const std::vector<Quaternion> qs = quat_list(3);
            if (qs.size() != 3)
                throw Error(ErrorCode::InvalidArgument, "triple linkage takes three algebras");
            require_exact("the linkage search");
            const int b = bound(3);
            r["bound"] = b;
            auto c = triple_linkage(qs[0], qs[1], qs[2], b);
            r["certificate"] = c ? to_json(*c) : json(nullptr);
            if (!c)
                status = Status::Unresolved;
            return r;
        }
        if (op == "tight" || op == "sigma") {
            const std::vector<Quaternion> qs = quat_list(1);
            const int b = bound(3);
            r["bound"] = b;
            auto t = is_tight(qs, b);
            if (!t) {
                r["tight_set"] = nullptr;
                status = Status::Unresolved;
                return r;
            }
            r["tight_set"] = to_json(*t);
            if (op == "sigma") {
                std::optional<QuadForm> claim;
                std::string text;
                if (auto it = cmd_.named.find("claim"); it != cmd_.named.end()) {
                    claim = parse_form(it->second, f_);
                    text = "Sigma ~ " + claim->to_string();
                    input["claim"] = it->second;
                }
                r["sigma"] = to_json(sigma_invariant(*t, claim, text, opt_.seed));
            }
            return r;
        }
        unknown();
    }

    // ------------------------------------------------ paper

    json paper_op()
    {
        const std::string& op = cmd_.op;
        json r;
        if (op == "lemma21") {
            const Elem a = elem(0, "alpha", "1");
            const Elem b = elem(1, "beta", "t");
            const Elem c = elem(2, "gamma", "t+1");
            const Quaternion q(f_, a, b);
            const Quaternion q2(f_, a, c);
            const Quaternion sh = iso_shift(q);
            const Quaternion prod = brauer_mul_same_alpha(q, q2);
            const auto same = [&](const BrauerClass& x, const BrauerClass& y) -> json {
                if (!f_.exact())
                    return nullptr;
                return x == y;
            };
            json checks = json::array();
            checks.push_back(json{{"claim", "[a,b) ~ [a^2+b,b)"},
                                  {"from", q.to_string()},
                                  {"to", sh.to_string()},
                                  {"same_class", same(brauer_class(q), brauer_class(sh))}});
            if (!a.is_zero()) {
                const Quaternion sc = iso_scale(q);
                checks.push_back(json{{"claim", "[a,b) ~ [a,ab)"},
                                      {"from", q.to_string()},
                                      {"to", sc.to_string()},
                                      {"same_class", same(brauer_class(q), brauer_class(sc))}});
            }
            checks.push_back(json{{"claim", "[a,b) + [a,c) ~ [a,bc)"},
                                  {"from", quats({q, q2})},
                                  {"to", prod.to_string()},
                                  {"same_class", same(brauer_class(q) + brauer_class(q2), brauer_class(prod))}});
            if (f_.exact()) {
                r["ramification"] = json{{"[a,b)", to_json(brauer_class(q).ramification(), f_)},
                                         {"[a,c)", to_json(brauer_class(q2).ramification(), f_)},
                                         {"[a,bc)", to_json(brauer_class(prod).ramification(), f_)}};
            }
            r["checks"] = checks;
            bool ok = f_.exact();
            for (const json& c : checks)
                ok = ok && c["same_class"] == true;
            if (!f_.exact())
                status = Status::Unresolved;
            r["holds"] = f_.exact() ? json(ok) : json(nullptr);
            return r;
        }
        if (op == "lemma42") {
            const Elem a = elem(0, "alpha", "t");
            const Elem b = elem(1, "beta", "t");
            const Elem l = elem(2, "lambda", "1");
            const Quaternion q(f_, a, b);
            const SlotSquareResult s = right_slot_square(q, l);
            r["claim"] = "[a,b) ~ [a + l^2 a/b, b + l^2)";
            r["algebra"] = q.to_string();
            r["rewritten"] = s.result.to_string();
            r["witness"] = to_json(s.witness);
            if (f_.exact()) {
                r["ramification"] = json::array(
                    {to_json(brauer_class(q).ramification(), f_), to_json(brauer_class(s.result).ramification(), f_)});
                r["same_class"] = is_isomorphic(q, s.result);
            }
            return r;
        }
        if (op == "lemma43") {
            const Elem a = elem(0, "alpha", "1");
            const Elem b = elem(1, "beta", "t");
            const Elem c = elem(2, "gamma", "t");
            r = pair_json(leftoright_pair(f_, a, b, c, opt_.seed), f_);
            r["claim"] = r["sigma"]["claim"];
            return r;
        }
        if (op == "prop44") {
            const Elem a = elem(0, "alpha", "1");
            const Elem b = elem(1, "beta", "t");
            const Elem c = elem(2, "gamma", "t");
            const TripleConstruction t = witteq_triple(f_, a, b, c, opt_.seed);
            r = triple_json(t, f_);
            r["claim"] = "psi, phi, pi pairwise linked and tight; Sigma ~ <<gamma,beta,alpha]]";
            if (f_.exact())
                r["target_witt_class"] = to_json(witt_class(PfisterQ(f_, {c, b}, a).expand()));
            if (t.sigma.verdict == Verdict::Failed)
                status = Status::Error;
            return r;
        }
        if (op == "thm33") {
            const int n = named_int("n", 3);
            const Elem a = elem(0, "a", "a");
            const Elem b = elem(1, "b", "b");
            const Elem c = elem(2, "c", "c");
            const PfisterQ psi = parse_pfister(named("psi", "<<e]]"), f_);
            const int samples = named_int("samples", 200);
            const ThreeSlotReport t = three_slot_construction(n, f_, a, b, c, psi, opt_.seed, samples);
            r["claim"] = "<<a,b>>psi + <<a,c>>psi = <<a,bc>>psi mod the next power of I (and symmetric variants)";
            json forms = json::array();
            for (const PfisterQ& p : t.forms)
                forms.push_back(p.to_string());
            r["forms"] = forms;
            json cong = json::array();
            for (const Congruence& cg : t.congruences)
                cong.push_back(json{{"identity", cg.name}, {"rhs", cg.rhs.to_string()}});
            r["congruences"] = cong;
            json sh = json::array();
            bool all = true;
            for (const ShadowCheck& s : t.shadow) {
                sh.push_back(json{{"identity", s.identity}, {"passed", s.passed}, {"total", s.total}});
                all = all && s.passed == s.total && s.total > 0;
            }
            r["brauer_shadow"] = sh;
            r["specialized"] = json{{"passed", t.specialized.passed}, {"total", t.specialized.total}};
            r["sigma"] = json{{"dim", t.sigma_form.dim()},
                              {"target", tensor_note(t)},
                              {"verdict", to_string(t.sigma_verdict)},
                              {"detail", t.sigma_detail}};
            r["evidence_only"] = t.evidence_only;
            r["holds"] = all && t.specialized.passed == t.specialized.total;
            if (!all || t.sigma_verdict == Verdict::Failed)
                status = Status::Error;
            return r;
        }
        if (op == "thm45") {
            const Elem c = elem(0, "gamma", "t");
            const Elem b = elem(1, "beta", "t+1");
            const Elem a = elem(2, "alpha", "1");
            const PipelineReport p = pfister3_pipeline(f_, c, b, a, bound(3), opt_.seed);
            r["claim"] = "<<gamma,beta,alpha]] is hyperbolic";
            r["target"] = p.target.to_string();
            r["fast_path"] = p.fast_path;
            if (p.fast_path) {
                r["reason"] = p.fast_reason;
                r["witness"] = vec_json(*p.witness, f_);
            }
            if (p.triple)
                r["triple"] = triple_json(*p.triple, f_);
            r["linkage"] = p.linkage ? to_json(*p.linkage) : json(nullptr);
            r["consequence"] = p.consequence;
            if (p.consequence_check)
                r["consequence_check"] = to_json(*p.consequence_check);
            r["target_hyperbolic"] = p.target_hyperbolic ? json(*p.target_hyperbolic) : json(nullptr);
            r["resolved"] = p.resolved;
            if (!p.resolved)
                status = Status::Unresolved;
            if (p.consequence_check && p.consequence_check->verdict == Verdict::Failed)
                status = Status::Error;
            return r;
        }
        if (op == "q54-probe") {
            require_exact("the probe");
            const int count = named_int("count", 50);
            const int degree = named_int("degree", 2);
            const int b = bound(4);
            const ProbeReport p = triple_linkage_probe(f_, opt_.seed, count, degree, b);
            r["claim"] = "every triple of quaternion algebras is linked (exploratory)";
            r["count"] = p.count;
            r["degree_bound"] = p.degree_bound;
            r["search_bound"] = p.search_bound;
            json entries = json::array();
            for (const ProbeEntry& e : p.entries) {
                json j;
                j["triple"] = quats(e.triple);
                if (e.cert) {
                    j["outcome"] = "LINKED";
                    j["mode"] = to_string(e.cert->mode);
                    j["common"] = to_json(e.cert->common, f_);
                    j["reverified"] = e.reverified;
                } else {
                    j["outcome"] = "UNRESOLVED";
                }
                entries.push_back(j);
            }
            r["entries"] = entries;
            r["linked"] = p.linked;
            r["unresolved"] = p.unresolved;
            r["verification_failures"] = p.verification_failures;
            if (p.verification_failures > 0)
                status = Status::Error;
            else if (p.unresolved > 0)
                status = Status::Unresolved;
            return r;
        }
        unknown();
    }

    static std::string tensor_note(const ThreeSlotReport& t)
    {
        std::vector<Elem> slots{t.a, t.b, t.c};
        slots.insert(slots.end(), t.psi.bslots().begin(), t.psi.bslots().end());
        return PfisterQ(t.psi.field(), slots, t.psi.qslot()).to_string();
    }

    const Command& cmd_;
    const CommandOptions& opt_;
    const FieldCtx& f_;
};

std::string default_field(const Command& cmd)
{
    if (cmd.group == "paper" && cmd.op == "thm33")
        return "gf2(a,b,c,e)";
    return "gf2(t)";
}

json error_json(const Error& e)
{
    json j;
    j["code"] = to_string(e.code());
    j["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
        j["line"] = pe->line();
        j["column"] = pe->column();
    }
    return j;
}

const char* status_name(Status s)
{
    switch (s) {
    case Status::Ok:
        return "ok";
    case Status::Unresolved:
        return "unresolved";
    case Status::Error:
        break;
    }
    return "error";
}

json selftest(const CommandOptions& opt, Status& status)
{
    const std::vector<CheckResult> rs = run_checks(CheckScale::Quick, opt.seed, {});
    json a = json::array();
    for (const CheckResult& c : rs) {
        json j{{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"instances", c.instances},
               {"failures", c.failures}, {"detail", c.detail}};
        if (!opt.stable)
            j["seconds"] = c.seconds;
        a.push_back(j);
        if (!c.passed)
            status = Status::Error;
    }
    return json{{"checks", a}};
}

} // namespace

CommandResult run_command(const Command& cmd, const CommandOptions& opt)
{
    const auto start = std::chrono::steady_clock::now();
    json rep;
    rep["command"] = cmd.op.empty() ? cmd.group : cmd.group + " " + cmd.op;
    Status status = Status::Ok;
    try {
        if (cmd.group == "selftest") {
            rep["seed"] = opt.seed;
            rep["result"] = selftest(opt, status);
        } else {
            const FieldCtx field = FieldCtx::parse(opt.field.empty() ? default_field(cmd) : opt.field);
            rep["field"] = field.spec();
            rep["seed"] = opt.seed;
            if (opt.bound >= 0)
                rep["bound"] = opt.bound;
            Runner r(cmd, opt, field);
            try {
                json res = r.run();
                rep["input"] = r.input;
                rep["result"] = std::move(res);
                status = r.status;
            } catch (const Unresolved& u) {
                rep["input"] = r.input;
                rep["result"] = json{{"unresolved", u.reason}};
                status = Status::Unresolved;
            } catch (const Error& e) {
                if (e.code() != ErrorCode::UnsupportedField)
                    throw;
                rep["input"] = r.input;
                rep["result"] = json{{"unresolved", e.what()}};
                status = Status::Unresolved;
            }
        }
    } catch (const Error& e) {
        rep["error"] = error_json(e);
        status = Status::Error;
    }
    rep["status"] = status_name(status);
    if (!opt.stable)
        rep["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return CommandResult{std::move(rep), status};
}

namespace {

void apply_options(const json& j, CommandOptions& o)
{
    if (j.contains("field"))
        o.field = j.at("field").get<std::string>();
    if (j.contains("seed"))
        o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("bound"))
        o.bound = j.at("bound").get<int>();
    if (j.contains("stable_output"))
        o.stable = j.at("stable_output").get<bool>();
}

std::string as_string(const json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

} // namespace

CommandResult run_scenario(const json& scenario, const CommandOptions& defaults)
{
    CommandOptions base = defaults;
    json out;
    std::vector<Status> all;
    try {
        if (!scenario.is_object() || !scenario.contains("commands") || !scenario.at("commands").is_array())
            throw Error(ErrorCode::InvalidArgument, "a scenario is an object with a 'commands' array");
        apply_options(scenario, base);
        out["scenario"] = json{{"field", base.field}, {"seed", base.seed}, {"commands", scenario.at("commands").size()}};
        json results = json::array();
        for (const json& c : scenario.at("commands")) {
            Command cmd;
            cmd.group = c.at("group").get<std::string>();
            cmd.op = c.value("op", std::string{});
            if (c.contains("args"))
                for (const json& a : c.at("args"))
                    cmd.positional.push_back(as_string(a));
            if (c.contains("options"))
                for (const auto& [k, v] : c.at("options").items())
                    cmd.named[k] = as_string(v);
            CommandOptions o = base;
            apply_options(c, o);
            if (c.contains("options")) {
                // global options may also appear among the command options
                apply_options(c.at("options"), o);
                for (const char* k : {"field", "seed", "bound", "stable_output"})
                    cmd.named.erase(k);
            }
            CommandResult r = run_command(cmd, o);
            all.push_back(r.status);
            results.push_back(std::move(r.report));
        }
        out["results"] = results;
    } catch (const json::exception& e) {
        out["error"] = json{{"code", "ParseError"}, {"message", std::string("malformed scenario: ") + e.what()}};
        all.push_back(Status::Error);
    } catch (const Error& e) {
        out["error"] = error_json(e);
        all.push_back(Status::Error);
    }
    const int code = exit_code(all);
    const Status s = code == 0 ? Status::Ok : code == 2 ? Status::Unresolved : Status::Error;
    out["status"] = status_name(s);
    return CommandResult{std::move(out), s};
}

std::vector<Command> paper_suite()
{
    std::vector<Command> out;
    for (const char* op : {"lemma21", "lemma42", "lemma43", "prop44", "thm33", "thm45", "q54-probe"})
        out.push_back(Command{"paper", op, {}, {}});
    return out;
}

namespace {

void render(std::ostringstream& os, const json& j, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_structured() && !v.empty()) {
                os << pad << k << ":\n";
                render(os, v, indent + 1);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const json& v : j) {
            if (v.is_structured() && !v.empty()) {
                os << pad << "-\n";
                render(os, v, indent + 1);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

} // namespace

std::string render_text(const json& report)
{
    std::ostringstream os;
    render(os, report, 0);
    return os.str();
}

} // namespace c2q
