// descent: exact-arithmetic descent and codescent checks on a workspace.
//
//   descent <command> [key=value ...] [--workspace FILE] [--truncation N]
//           [--seed S] [--format table|json]
//
// Exit codes: 0 all verdicts hold, 1 some check refuted, 2 usage or
// validation error.  Reports on stdout are byte-deterministic for a fixed
// workspace and seed; timing goes to stderr.

#include "descent/suites.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace descent;

namespace {

struct Args {
    std::map<std::string, std::string> kv;
    std::string get(const std::string& key, const std::string& fallback = "") const {
        auto it = kv.find(key);
        if (it != kv.end()) return it->second;
        if (!fallback.empty()) return fallback;
        throw error("missing argument: " + key + "=...");
    }
    bool has(const std::string& key) const { return kv.count(key) > 0; }
};

// "0..3" or "2"
std::pair<int, int> parse_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

struct Report {
    std::string command;
    json inputs = json::object();
    std::vector<std::pair<std::string, std::string>> fields;  // ordered key/value lines
    std::vector<std::pair<std::string, bool>> verdicts;
    bool all_hold() const {
        for (auto& [n, ok] : verdicts)
            if (!ok) return false;
        return true;
    }
    void field(const std::string& k, const std::string& v) { fields.emplace_back(k, v); }
    void verdict(const std::string& k, bool ok) { verdicts.emplace_back(k, ok); }
    void absorb(const CheckReport& rep) {
        for (auto& item : rep.items) verdict(item.name, item.ok);
        for (auto& u : rep.unchecked) field("unchecked", u);
    }

    void print(const std::string& format) const {
        if (format == "json") {
            json doc;
            doc["command"] = command;
            doc["inputs"] = inputs;
            json fs = json::array();
            for (auto& [k, v] : fields) fs.push_back({{"name", k}, {"value", v}});
            doc["fields"] = fs;
            json vs = json::array();
            for (auto& [k, ok] : verdicts) vs.push_back({{"name", k}, {"holds", ok}});
            doc["verdicts"] = vs;
            doc["holds"] = all_hold();
            std::cout << doc.dump(2) << "\n";
            return;
        }
        std::cout << "== " << command;
        for (auto& [k, v] : inputs.items()) std::cout << " " << k << "=" << v.get<std::string>();
        std::cout << " ==\n";
        for (auto& [k, v] : fields) std::cout << "  " << k << ": " << v << "\n";
        for (auto& [k, ok] : verdicts) std::cout << "  [" << (ok ? "ok" : "FAIL") << "] " << k << "\n";
        std::cout << (all_hold() ? "VERDICT: holds" : "VERDICT: refuted") << "\n";
    }
};

const ModuleOverRing& module_over(const Workspace& ws, const RingMap& phi, const std::string& name,
                                  bool over_target = false) {
    const ModuleOverRing& m = ws.module(name);
    const RingSpec& expect = over_target ? phi.target() : phi.source();
    if (!m.ring().same_presentation(expect))
        throw error("module '" + name + "' is not over the expected ring " + expect.name());
    return m;
}

int run_command(const std::string& cmd, const Args& args, Workspace& ws, int truncation,
                uint64_t seed, const std::string& format) {
    Report rep;
    rep.command = cmd;
    for (auto& [k, v] : args.kv) rep.inputs[k] = v;

    if (cmd == "check-beck") {
        RingMap phi = ws.ring_map(args.get("phi"));
        auto r = beck_descent_check(phi, module_over(ws, phi, args.get("m")));
        rep.field("equalizer", r.equalizer_factors);
        rep.absorb(r.report);
        rep.verdict("Beck descent holds", r.holds);
    } else if (cmd == "amitsur") {
        RingMap phi = ws.ring_map(args.get("phi"));
        const ModuleOverRing& m = module_over(ws, phi, args.get("m"));
        const ModuleOverRing& n = module_over(ws, phi, args.get("n", args.get("m")));
        auto [lo, hi] = parse_range(args.get("s", "0.." + std::to_string(truncation - 1)));
        require(hi + 1 <= truncation, "s out of range at this truncation");
        auto omega = amitsur_complex(phi, n, truncation);
        CosimplicialGroup hom = hom_cosimplicial(m, omega.object);
        for (int s = lo; s <= hi; ++s)
            rep.field("H^" + std::to_string(s), cohomotopy(hom, s).invariant_factors().str());
        rep.verdict("cosimplicial identities", check_cosimplicial_identities(omega.object).all_passed());
    } else if (cmd == "e2") {
        RingMap phi = ws.ring_map(args.get("phi"));
        auto complex_of = [&](const std::string& name) {
            for (auto& [n2, c] : ws.complexes)
                if (n2 == name) return c;
            return ChainComplex::concentrated(module_over(ws, phi, name), 0);
        };
        ChainComplex mc = complex_of(args.get("m"));
        ChainComplex nc = complex_of(args.get("n", args.get("m")));
        auto [slo, shi] = parse_range(args.get("s", "0.." + std::to_string(truncation - 1)));
        auto [tlo, thi] = parse_range(args.get("t", "0"));
        require(shi + 1 <= truncation, "s out of range at this truncation");
        for (int t = tlo; t <= thi; ++t) {
            CosimplicialGroup row = e2_cosimplicial_row(phi, mc, nc, t, truncation);
            for (int s = slo; s <= shi; ++s)
                rep.field("E2^{" + std::to_string(s) + "," + std::to_string(t) + "}",
                          cohomotopy(row, s).invariant_factors().str());
        }
    } else if (cmd == "coring") {
        RingMap phi = ws.ring_map(args.get("phi"));
        DescentCoRing w = descent_coring(phi);
        rep.field("underlying A smash_B A", w.underlying.invariant_factors().str());
        rep.field("comultiplication matrix", w.comultiplication.matrix().str());
        rep.field("counit matrix", w.counit.matrix().str());
        rep.absorb(w.validation);
    } else if (cmd == "can") {
        RingMap phi = ws.ring_map(args.get("phi"));
        DescentDatum d = can_phi(phi, module_over(ws, phi, args.get("m")));
        rep.field("Can(m)", d.module.underlying().invariant_factors().str());
        rep.field("coaction matrix", d.coaction.matrix().str());
        rep.absorb(validate_descent_datum(d));
    } else if (cmd == "prim") {
        RingMap phi = ws.ring_map(args.get("phi"));
        const ModuleOverRing& m = module_over(ws, phi, args.get("m"));
        PrimResult p = prim_phi(can_phi(phi, m));
        ModuleMap unit = prim_can_unit(phi, m, p);
        rep.field("Prim(Can(m))", p.object.underlying().invariant_factors().str());
        rep.field("unit matrix", unit.matrix().str());
        rep.verdict("unit map is an isomorphism", is_isomorphism(unit.as_group_map()));
    } else if (cmd == "sdr") {
        RingMap phi = ws.ring_map(args.get("phi"));
        ModuleOverRing n = args.has("n") ? module_over(ws, phi, args.get("n"), true)
                                         : ring_as_module(phi.target());
        auto cert = restricted_module_sdr(phi, n, truncation);
        rep.field("levels", std::to_string(truncation + 1));
        rep.absorb(cert.identities);
        rep.verdict("contractibility certificate", cert.certified);
    } else if (cmd == "strict-complete") {
        RingMap phi = ws.ring_map(args.get("phi"));
        std::string family = args.get("family", "canonical");
        ModuleOverRing n = args.has("n") ? module_over(ws, phi, args.get("n"), true)
                                         : ring_as_module(phi.target());
        ModuleOverRing z = restrict_scalars(n, phi);
        MonadHandle<ModCat> t = monad_T_phi(phi);
        std::vector<ModuleMap> fam;
        if (family == "canonical") {
            // the T-algebra structure of a restricted module
            ModuleOverRing tz = t.apply(z);
            const int ga = phi.target().generators();
            Mat eps(z.generators(), tz.generators());
            for (int i = 0; i < n.generators(); ++i)
                for (int j = 0; j < ga; ++j) {
                    std::vector<Int> ej(static_cast<size_t>(ga));
                    ej[j] = 1;
                    Mat act = n.action_of(ej).matrix();
                    for (int r = 0; r < n.generators(); ++r)
                        if (sgn(act(r, i)) != 0) eps(r, tensor_index(i, j, ga)) = act(r, i);
                }
            fam = algebra_family(phi, ModuleMap(tz, z, std::move(eps)), truncation);
        } else if (family == "sum") {
            // collapse the innermost tensor slot by summation; fails unitality
            std::vector<ModuleOverRing> power{z};
            for (int k = 1; k <= truncation; ++k) power.push_back(t.apply(power.back()));
            const int ga = phi.target().generators();
            for (int k = 1; k <= truncation; ++k) {
                Mat m(power[k - 1].generators(), power[k].generators());
                for (int i = 0; i < power[k - 1].generators(); ++i)
                    for (int j = 0; j < ga; ++j) m(i, i * ga + j) = 1;
                fam.push_back(ModuleMap(power[k], power[k - 1], std::move(m)));
            }
        } else {
            throw error("unknown family '" + family + "' (canonical|sum)");
        }
        auto cert = strict_completion_check(phi, z, fam, truncation);
        rep.absorb(cert.identities);
        rep.verdict("strict completeness certificate", cert.certified);
    } else if (cmd == "adjunction-iso") {
        RingMap phi = ws.ring_map(args.get("phi"));
        auto r = adjunction_iso_check(phi, module_over(ws, phi, args.get("x")),
                                      module_over(ws, phi, args.get("y")));
        rep.field("Hom_B(x, Ty)", r.hom_b.invariant_factors().str());
        rep.field("Hom_descent(can x, can Ty)", r.hom_descent.invariant_factors().str());
        rep.absorb(r.report);
        rep.verdict("canonical map is a bijection", r.bijective);
    } else if (cmd == "cech") {
        FinSetMap phi = ws.finset_map(args.get("phi"));
        const Bundle& f = ws.bundle(args.get("f"));
        int n = args.has("n") ? std::stoi(args.get("n")) : truncation;
        auto nerve = cech_nerve(phi, f, n);
        for (int lvl = 0; lvl <= n; ++lvl)
            rep.field("level " + std::to_string(lvl),
                      std::to_string(nerve.object.level[lvl].total.size()) + " elements");
        rep.verdict("simplicial identities", check_simplicial_identities(nerve.object).all_passed());
        rep.verdict("augmentation coequalized", augmentation_coequalized(nerve));
        auto [p0, proj] = pi0_simplicial(nerve.object);
        rep.field("pi_0", std::to_string(p0.total.size()) + " classes");
    } else if (cmd == "codescent-beck") {
        FinSetMap phi = ws.finset_map(args.get("phi"));
        auto r = beck_codescent_check(phi, ws.bundle(args.get("d")));
        rep.field("coequalizer", std::to_string(r.coequalizer_object.total.size()) + " classes");
        if (!r.witness.empty()) rep.field("witness", r.witness);
        rep.absorb(r.report);
        rep.verdict("Beck codescent holds", r.holds);
    } else if (cmd == "coalgebra") {
        FinSetMap phi = ws.finset_map(args.get("phi"));
        const Bundle& f = ws.bundle(args.get("f"));
        auto r = detect_coalgebra(phi, f);
        if (r.found) {
            std::string sec;
            for (int x = 0; x < f.total.size(); ++x)
                sec += f.total.elems[x] + "->" + phi.source.elems[r.section[x]] + " ";
            rep.field("section", sec);
            rep.absorb(r.verification);
        } else {
            rep.field("refutation", r.witness);
        }
        rep.verdict("coalgebra structure exists", r.found);
    } else if (cmd == "kan") {
        CatFunctor phi = ws.cat_functor(args.get("functor"));
        std::string kind = args.get("kind", "set");
        const auto& x = Workspace::named(ws.set_diagrams, args.get("x"), "set diagram");
        if (kind == "set") {
            auto k = kan_comonad<SetCat>(phi);
            Diagram<SetCat> kx = k.apply(x);
            for (size_t d = 0; d < phi.target.objects.size(); ++d)
                rep.field("K(x)(" + phi.target.objects[d] + ")",
                          std::to_string(kx.value_of[d].size()) + " elements");
            rep.verdict("comonad laws on x", check_comonad_laws(k, {x}).all_passed());
        } else if (kind == "ab") {
            auto k = kan_comonad<AbCat>(phi);
            Diagram<AbCat> xa = linearize(x);
            Diagram<AbCat> kx = k.apply(xa);
            for (size_t d = 0; d < phi.target.objects.size(); ++d)
                rep.field("K(Zx)(" + phi.target.objects[d] + ")",
                          kx.value_of[d].invariant_factors().str());
            rep.verdict("comonad laws on Zx", check_comonad_laws(k, {xa}).all_passed());
        } else {
            throw error("unknown kind '" + kind + "' (set|ab)");
        }
        if (args.has("d")) {
            // left Kan extension of the pulled-back diagram at a single object
            int d = phi.target.object_index(args.get("d"));
            auto lan = left_kan_at(phi, precompose(phi, x), d);
            rep.field("Simp_Phi(" + args.get("d") + ")",
                      std::to_string(lan.comma.objects.size()) + " objects, " +
                          std::to_string(lan.comma.category.morphisms.size()) + " morphisms");
            rep.field("colim over Simp_Phi(" + args.get("d") + ")",
                      std::to_string(lan.colimit.object.size()) + " elements");
        }
    } else if (cmd == "kan-assembly") {
        CatFunctor phi = ws.cat_functor(args.get("functor"));
        const auto& x = Workspace::named(ws.set_diagrams, args.get("x"), "set diagram");
        int d = phi.target.object_index(args.get("d"));
        std::string kind = args.get("kind", "set");
        if (kind == "set") {
            auto r = assembly_pi0_check(phi, x, d);
            rep.field("coequalizer", std::to_string(r.coequalizer.size()) + " classes");
            rep.absorb(r.report);
            rep.verdict("assembly comparison holds", r.holds);
        } else {
            auto r = assembly_pi0_check(phi, linearize(x), d);
            rep.field("coequalizer", r.coequalizer.invariant_factors().str());
            rep.absorb(r.report);
            rep.verdict("assembly comparison holds", r.holds);
        }
        if (phi.is_full()) {
            bool full_ok = true;
            for (size_t c = 0; c < phi.source.objects.size(); ++c)
                full_ok = full_ok && fullness_identity_check(phi, x, static_cast<int>(c)).report.all_passed();
            rep.verdict("fullness identity at every object", full_ok);
        } else {
            rep.field("fullness identity", "skipped: functor is not full");
        }
    } else if (cmd == "laws") {
        if (args.has("phi")) {
            RingMap phi = ws.ring_map(args.get("phi"));
            std::vector<ModuleOverRing> probes;
            if (args.has("probes")) {
                std::string list = args.get("probes");
                size_t pos = 0;
                while (pos != std::string::npos) {
                    size_t comma = list.find(',', pos);
                    std::string name = list.substr(pos, comma == std::string::npos ? comma : comma - pos);
                    probes.push_back(module_over(ws, phi, name));
                    pos = comma == std::string::npos ? comma : comma + 1;
                }
            } else {
                for (auto& [n, m] : probe_modules(phi)) probes.push_back(m);
            }
            rep.absorb(check_monad_laws(monad_T_phi(phi), probes));
        } else if (args.has("kphi")) {
            FinSetMap phi = ws.finset_map(args.get("kphi"));
            std::vector<Bundle> probes{Bundle::over_self(phi.target)};
            if (args.has("probes")) {
                probes.clear();
                std::string list = args.get("probes");
                size_t pos = 0;
                while (pos != std::string::npos) {
                    size_t comma = list.find(',', pos);
                    probes.push_back(ws.bundle(list.substr(pos, comma == std::string::npos ? comma : comma - pos)));
                    pos = comma == std::string::npos ? comma : comma + 1;
                }
            }
            rep.absorb(check_comonad_laws(comonad_K_phi_sets(phi), probes));
        } else if (args.has("functor")) {
            CatFunctor phi = ws.cat_functor(args.get("functor"));
            const auto& x = Workspace::named(ws.set_diagrams, args.get("x"), "set diagram");
            rep.absorb(check_comonad_laws(kan_comonad<SetCat>(phi), {x}));
        } else {
            throw error("laws needs phi=, kphi= or functor=");
        }
    } else if (cmd == "matching") {
        if (args.has("phi")) {
            RingMap phi = ws.ring_map(args.get("phi"));
            const ModuleOverRing& m = module_over(ws, phi, args.get("m"));
            int idx = std::stoi(args.get("n", "1"));
            auto omega = amitsur_complex(phi, m, truncation);
            auto r = matching_object(omega.object, idx);
            rep.field("matching object", r.description);
            rep.field("canonical map", r.canonical.matrix().str());
            rep.verdict("sigma surjective", r.surjective);
            rep.field("sigma injective", r.injective ? "yes" : "no");
        } else if (args.has("kphi")) {
            FinSetMap phi = ws.finset_map(args.get("kphi"));
            const Bundle& f = ws.bundle(args.get("f"));
            int idx = std::stoi(args.get("n", "1"));
            auto nerve = cech_nerve(phi, f, truncation);
            auto r = latching_object(nerve.object, idx);
            rep.field("latching object", r.description);
            rep.verdict("sigma injective", r.injective);
            rep.field("sigma surjective", r.surjective ? "yes" : "no");
        } else {
            throw error("matching needs phi= (cosimplicial) or kphi= (simplicial)");
        }
    } else if (cmd == "selftest") {
        auto results = run_all_suites(seed);
        bool all = true;
        for (auto& r : results) {
            rep.verdict(r.name + (r.detail.empty() ? "" : " [" + r.detail + "]"), r.passed);
            all = all && r.passed;
            std::cerr << "suite " << r.name << ": " << (r.passed ? "pass" : "FAIL") << " ("
                      << r.seconds << "s)\n";
        }
        rep.field("suites", std::to_string(results.size()));
    } else if (cmd == "workspace") {
        std::cout << emit_workspace(ws).dump(2) << "\n";
        return 0;
    } else {
        throw error("unknown command: " + cmd);
    }

    rep.print(format);
    return rep.all_hold() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact descent and codescent checks over a workspace"};
    app.allow_extras();
    std::string workspace_path, format = "table";
    int truncation = -1;
    uint64_t seed = 0;
    app.add_option("--workspace", workspace_path, "workspace JSON file (default: built-in catalog)");
    app.add_option("--truncation", truncation, "truncation level (default: from workspace)");
    app.add_option("--seed", seed, "seed for the random suites");
    app.add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 2;
    }

    std::vector<std::string> extras = app.remaining();
    if (extras.empty()) {
        std::cerr << "usage: descent <command> [key=value ...] [--workspace FILE] [--truncation N]\n"
                     "commands: check-beck amitsur e2 coring can prim sdr strict-complete\n"
                     "          adjunction-iso cech codescent-beck coalgebra kan kan-assembly\n"
                     "          laws matching selftest workspace\n";
        return 2;
    }

    try {
        std::string cmd = extras.front();
        Args args;
        for (size_t i = 1; i < extras.size(); ++i) {
            auto eq = extras[i].find('=');
            if (eq == std::string::npos) throw error("arguments take the form key=value: " + extras[i]);
            args.kv[extras[i].substr(0, eq)] = extras[i].substr(eq + 1);
        }

        Workspace ws;
        if (workspace_path.empty()) {
            ws = builtin_workspace();
        } else {
            std::ifstream in(workspace_path);
            if (!in) throw error("cannot open workspace file: " + workspace_path);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            ws = load_workspace_text(text);
        }
        if (truncation > 0) ws.truncation = truncation;

        auto start = std::chrono::steady_clock::now();
        int code = run_command(cmd, args, ws, ws.truncation, seed, format);
        std::cerr << "time: "
                  << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
                  << "s\n";
        return code;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
