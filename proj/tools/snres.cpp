#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "snres/cocycles.hpp"
#include "snres/h3.hpp"

using json = nlohmann::json;
using namespace snres;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

struct Options {
    bool json = false;
    bool csv = false;
    bool unsafe_large = false;
    int jobs = 1;
};

void check_n(int n, bool touches_degree_four, const Options& o, const std::string& flag = "--n") {
    if (n < 1) throw UsageError(flag + " must be at least 1");
    const int bound = touches_degree_four ? 6 : 8;
    if (n > bound && !o.unsafe_large)
        throw UsageError(flag + " = " + std::to_string(n) + " exceeds the default bound " + std::to_string(bound) +
                         " (use --unsafe-large)");
    if (n > Perm::kMaxN) throw UsageError(flag + " must be at most " + std::to_string(Perm::kMaxN));
}

RingSpec parse_ring(const std::string& s) {
    if (s == "z" || s == "Z") return RingSpec::Z();
    if (s.size() > 1 && (s[0] == 'z' || s[0] == 'Z')) {
        const long m = std::strtol(s.c_str() + 1, nullptr, 10);
        if (m >= 2) return RingSpec::Zmod(m);
    }
    throw UsageError("--ring must be z or zM with M >= 2, got " + s);
}

std::string group_label(const std::string& g) {
    std::string out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        out += g[i];
        if (g[i] == 'S' && i + 1 < g.size() && std::isdigit(static_cast<unsigned char>(g[i + 1]))) out += '_';
    }
    return out;
}

json factors_json(const AbelianGroupInfo& g) {
    json a = json::array();
    for (const Int& d : g.torsion) a.push_back(std::stoll(to_string(d)));
    return a;
}

std::string format_coefficient(const GroupRingElem& a) {
    std::string out;
    for (const auto& [g, c] : a.terms()) {
        const bool neg = c < 0;
        const Int m = neg ? Int(-c) : c;
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        const std::string w = format_word(nf_word(g));
        if (m != 1 || w == "1") out += to_string(m) + (w == "1" ? "" : " ");
        if (w != "1") out += w;
    }
    return out;
}

template <class Cell, class Name>
std::vector<std::string> format_terms(const Chain<Cell>& x, Name&& name) {
    std::vector<std::string> out;
    for (const auto& [c, a] : x.terms()) out.push_back("(" + format_coefficient(a) + ") " + name(c));
    return out;
}

void print_lines(const std::vector<std::string>& lines, const std::string& empty = "0") {
    if (lines.empty()) std::cout << empty << "\n";
    for (const std::string& l : lines) std::cout << l << "\n";
}

int emit_check(const Options& o, const std::string& name, int n, bool ok, const json& details,
               const std::vector<std::string>& human) {
    if (o.json) {
        std::cout << json{{"check", name}, {"n", n}, {"ok", ok}, {"details", details}}.dump(2) << "\n";
    } else {
        for (const std::string& l : human) std::cout << l << "\n";
        std::cout << (ok ? "PASS " : "FAIL ") << name << " n=" << n << "\n";
    }
    return ok ? kOk : kFailed;
}

int run_verify(const std::string& what, int n, bool printed, const Options& o) {
    if (what == "d2") {
        check_n(n, false, o);
        const auto failures = check_d_squared(n);
        std::vector<std::string> human;
        json d = json::array();
        for (const auto& f : failures) {
            d.push_back(f.cell.name());
            human.push_back("nonzero: " + f.cell.name());
        }
        return emit_check(o, "d2", n, failures.empty(), d, human);
    }
    if (what == "exactness") {
        if (n > 5 && !o.unsafe_large) throw UsageError("--n above 5 expands P over n! elements (use --unsafe-large)");
        check_n(n, false, o);
        const ExactnessReport r = verify_p_exactness(n);
        json d = json::array();
        std::vector<std::string> human;
        for (std::size_t i = 0; i < r.reduced_homology.size(); ++i) {
            d.push_back(r.reduced_homology[i].str());
            human.push_back("reduced H_" + std::to_string(i) + " = " + r.reduced_homology[i].str());
        }
        return emit_check(o, "exactness", n, r.exact(), {{"d2_zero", r.d2_zero}, {"reduced_homology", d}}, human);
    }
    if (what == "chain-maps") {
        check_n(n, false, o);
        const ChainMapReport c = verify_chain_maps(n);
        const PrismReport p = verify_prism(n);
        std::vector<std::string> human{"chain map identities checked: " + std::to_string(c.checked),
                                       "prism identities checked: " + std::to_string(p.checked)};
        json f = json::array();
        for (const auto& x : c.failures) {
            f.push_back({{"what", x.what}, {"residual", x.residual}});
            human.push_back("failed " + x.what + ": " + x.residual);
        }
        for (const auto& x : p.failures) {
            f.push_back({{"what", x.what}, {"residual", x.residual}});
            human.push_back("failed " + x.what + ": " + x.residual);
        }
        return emit_check(o, "chain-maps", n, c.ok() && p.ok(),
                          {{"chain_maps", c.checked}, {"prisms", p.checked}, {"failures", f}}, human);
    }
    if (what == "q-boundaries") {
        check_n(n, false, o);
        if (n < 4) throw UsageError("--n must be at least 4 for q-boundaries");
        const CrosscheckReport r = crosscheck_boundary_formulas(n, !printed);
        std::vector<std::string> human;
        json cls = json::array();
        bool all = true;
        int nonempty = 0;
        for (int c = 0; c < 9; ++c) {
            if (r.cells[c] > 0) ++nonempty;
            const bool ok = r.matches[c] == r.cells[c];
            all = all && ok;
            cls.push_back({{"class", c}, {"cells", r.cells[c]}, {"matching", r.matches[c]}});
            human.push_back("class " + std::to_string(c) + ": " + std::to_string(r.matches[c]) + "/" +
                            std::to_string(r.cells[c]));
        }
        human.push_back("classes matching: " + std::to_string(r.classes_matching()) + " of " +
                        std::to_string(nonempty) + " nonempty" +
                        (printed ? " (as printed)" : " (corrected)"));
        return emit_check(o, "q-boundaries", n, all,
                          {{"printed", printed},
                           {"classes_matching", r.classes_matching()},
                           {"classes_nonempty", nonempty},
                           {"classes", cls}}, human);
    }
    if (what == "cocycles") {
        check_n(n, false, o);
        const CocycleSuiteReport r = run_cocycle_suite(n, 4, {2, 4});
        std::vector<std::string> human{"cochains " + std::to_string(r.cochains) + ", rejected parameters " +
                                       std::to_string(r.illegal_rejected) + ", isomorphisms " +
                                       std::to_string(r.isomorphisms) + ", pairings " + std::to_string(r.pairings)};
        json f = json::array();
        for (const auto& x : r.failures) {
            f.push_back({{"what", x.what}, {"detail", x.detail}});
            human.push_back("failed " + x.what + ": " + x.detail);
        }
        return emit_check(o, "cocycles", n, r.ok(),
                          {{"cochains", r.cochains},
                           {"isomorphisms", r.isomorphisms},
                           {"pairings", r.pairings},
                           {"failures", f}},
                          human);
    }
    throw UsageError("unknown verification " + what);
}

int run_homology(bool cohomology, int n, const std::string& module, const std::string& ring, int degree,
                 const Options& o) {
    check_n(n, false, o);
    if (degree < 0 || degree > 2) throw UsageError("--deg must be 0, 1 or 2");
    const RingSpec r = parse_ring(ring);
    CoefficientModule m;
    try {
        m = CoefficientModule::parse(module, n, r);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--module: ") + e.what());
    }
    const FreeComplex P = p_complex(n);
    const HomologyReport rep = compute_homology(P, m, degree, cohomology);
    const std::string direction = cohomology ? "cohomology" : "homology";
    if (o.json) {
        json j{{"group", group_label(rep.group)},
               {"module", rep.module},
               {"ring", r.name()},
               {"degree", degree},
               {"direction", direction},
               {"free_rank", rep.info.free_rank},
               {"invariant_factors", factors_json(rep.info)}};
        if (!rep.representatives.empty()) j["representatives"] = rep.representatives;
        std::cout << j.dump(2) << "\n";
    } else if (o.csv) {
        std::string f;
        for (const Int& d : rep.info.torsion) f += (f.empty() ? "" : ";") + to_string(d);
        std::cout << "group,module,ring,direction,degree,free_rank,invariant_factors\n"
                  << group_label(rep.group) << "," << rep.module << "," << r.name() << "," << direction << ","
                  << degree << "," << rep.info.free_rank << "," << f << "\n";
    } else {
        std::cout << (cohomology ? "H^" : "H_") << degree << "(" << group_label(rep.group) << "; " << rep.module
                  << " over " << r.name() << ") = " << rep.info.str() << "\n";
        for (const std::string& s : rep.representatives) std::cout << "  " << s << "\n";
    }
    return kOk;
}

FreeComplex complex_for(const std::string& kind, int n, int top, const Options& o) {
    if (kind == "p") {
        check_n(n, false, o);
        return p_complex(n);
    }
    if (kind == "q") {
        check_n(n, top >= 4, o);
        return q_complex(n, top);
    }
    throw UsageError("--complex must be p or q");
}

int run_export(int n, const std::string& kind, int top, const std::string& path, const Options& o) {
    const FreeComplex x = complex_for(kind, n, top, o);
    json cells = json::array(), boundary = json::array();
    for (int k = 0; k <= x.top(); ++k) {
        cells.push_back(x.cells[static_cast<std::size_t>(k)]);
        json bk = json::array();
        if (k >= 1)
            for (const auto& terms : x.boundary[static_cast<std::size_t>(k)]) {
                json t = json::array();
                for (const auto& [idx, a] : terms) {
                    json coeff = json::array();
                    for (const auto& [g, c] : a.terms())
                        coeff.push_back({{"perm", g.images()}, {"coeff", std::stoll(to_string(c))}});
                    t.push_back({{"cell", idx}, {"name", x.cells[static_cast<std::size_t>(k - 1)][idx]},
                                 {"coefficient", coeff}});
                }
                bk.push_back(t);
            }
        boundary.push_back(bk);
    }
    const json j{{"group", group_label(x.group)}, {"complex", kind}, {"top", x.top()}, {"cells", cells},
                 {"boundary", boundary}};
    std::ofstream out(path);
    if (!out) throw UsageError("--out: cannot open " + path);
    out << j.dump(1) << "\n";
    if (!o.json) std::cout << "wrote " << path << "\n";
    return kOk;
}

int env_jobs() {
    const char* e = std::getenv("SNRES_JOBS");
    if (!e) return 1;
    const int j = std::atoi(e);
    return j >= 1 ? j : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Resolutions, homology and cohomology of symmetric groups"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    o.jobs = env_jobs();
    app.add_flag("--json", o.json, "Print results as JSON");
    app.add_flag("--unsafe-large", o.unsafe_large, "Lift the default size bounds");
    app.add_option("--jobs", o.jobs, "Worker bound for batch verifications (default SNRES_JOBS or 1)")
        ->check(CLI::PositiveNumber);

    int n = 0, dim = 0, degree = 1, top = 3;
    std::string word, cell, kind = "p", what, module = "trivial", ring = "z", out_path;
    bool printed = false, certificates = false;

    auto* nf = app.add_subcommand("nf", "Normal form of a word");
    nf->add_option("word", word, "Word such as \"s2 s1 s2\"")->required();
    nf->add_option("--n", n, "Degree of the symmetric group")->required();

    auto* enf = app.add_subcommand("enumerate-nf", "List all normal forms");
    enf->add_option("--n", n)->required();

    auto* cells = app.add_subcommand("cells", "List the cells of a complex in one dimension");
    cells->add_option("--n", n)->required();
    cells->add_option("--dim", dim)->required();
    cells->add_option("--complex", kind, "p or q")->check(CLI::IsMember({"p", "q"}));

    auto* bd = app.add_subcommand("boundary", "Boundary of a cell of P or an essential cell of Q");
    bd->add_option("cell", cell, "Cell name such as c34_1,4 or a bar simplex such as \"[s1|s3]\"")->required();
    bd->add_option("--n", n)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification battery");
    verify->add_option("what", what, "d2, exactness, chain-maps, q-boundaries or cocycles")
        ->required()
        ->check(CLI::IsMember({"d2", "exactness", "chain-maps", "q-boundaries", "cocycles"}));
    verify->add_option("--n", n)->required();
    verify->add_flag("--printed", printed, "Use the boundary table as printed (q-boundaries)");

    auto add_homology = [&](const std::string& name, const std::string& desc) {
        auto* s = app.add_subcommand(name, desc);
        s->add_option("--n", n)->required();
        s->add_option("--module", module, "trivial or perm:K");
        s->add_option("--ring", ring, "z, z2, z4, ...");
        s->add_option("--deg", degree)->required();
        s->add_flag("--csv", o.csv, "Print a CSV summary row");
        return s;
    };
    auto* hom = add_homology("homology", "Homology of S_n with coefficients");
    auto* coh = add_homology("cohomology", "Cohomology of S_n with coefficients");

    auto* h3 = app.add_subcommand("h3", "Integral H_3 of S_n from the essential cells");
    h3->add_option("--n", n)->required();
    h3->add_flag("--certificates", certificates, "Also verify the chain-level certificates (n >= 6)");

    auto* d8 = app.add_subcommand("d8-suite", "Cocycle checks on D_8");
    auto* transfer = app.add_subcommand("transfer", "Transfer of the D_8 class to S_n");
    transfer->add_option("--n", n)->default_val(6);

    auto* exp = app.add_subcommand("export-complex", "Write a complex as JSON");
    exp->add_option("--n", n)->required();
    exp->add_option("--out", out_path)->required();
    exp->add_option("--complex", kind, "p or q")->check(CLI::IsMember({"p", "q"}));
    exp->add_option("--top", top, "Top degree for q");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*nf) {
            if (n < 1 || n > Perm::kMaxN) throw UsageError("--n must be between 1 and 16");
            Word w;
            try {
                w = parse_word(word);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("word: ") + e.what());
            }
            for (const Letter& l : w)
                if (l.index < 1 || l.index >= n) throw UsageError("word: generator s" + std::to_string(l.index) +
                                                                  " is not in S_" + std::to_string(n));
            const std::string r = format_word(nf_word(word_to_perm(w, n)));
            if (o.json)
                std::cout << json{{"word", format_word(w)}, {"n", n}, {"normal_form", r}}.dump(2) << "\n";
            else
                std::cout << r << "\n";
            return kOk;
        }
        if (*enf) {
            check_n(n, false, o);
            std::vector<std::string> forms;
            for (const NormalForm& f : enumerate_normal_forms(n)) forms.push_back(format_word(f.word()));
            if (o.json)
                std::cout << json{{"n", n}, {"count", forms.size()}, {"normal_forms", forms}}.dump(2) << "\n";
            else
                print_lines(forms);
            return kOk;
        }
        if (*cells) {
            if (dim < 0) throw UsageError("--dim must be nonnegative");
            std::vector<std::string> names;
            if (kind == "p") {
                check_n(n, false, o);
                if (dim > 3) throw UsageError("--dim must be at most 3 for p");
                for (const PCell& c : enumerate_p_cells(n, dim)) names.push_back(c.name());
            } else {
                check_n(n, dim >= 4, o);
                for (const BarSimplex& s : enumerate_essential(n, dim)) names.push_back(s.str());
            }
            if (o.json)
                std::cout << json{{"n", n}, {"complex", kind}, {"dim", dim}, {"cells", names}}.dump(2) << "\n";
            else
                print_lines(names, "");
            return kOk;
        }
        if (*bd) {
            std::vector<std::string> terms;
            if (!cell.empty() && cell.front() == '[') {
                BarSimplex s;
                try {
                    s = parse_bar_simplex(cell, n);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(std::string("cell: ") + e.what());
                }
                check_n(n, s.dim() >= 4, o);
                if (classify_simplex(s) != Classification::Essential) throw UsageError("cell: not an essential simplex");
                QRewriter qr(n, true);
                terms = format_terms(qr.boundary_q(s), [](const BarSimplex& b) { return b.str(); });
            } else {
                check_n(n, false, o);
                PCell c;
                try {
                    c = parse_pcell(cell);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(std::string("cell: ") + e.what());
                }
                if (!is_valid_pcell(c, n)) throw UsageError("cell: " + cell + " is not a cell for this n");
                terms = format_terms(boundary_p(c, n), [](const PCell& p) { return p.name(); });
            }
            if (o.json)
                std::cout << json{{"cell", cell}, {"n", n}, {"boundary", terms}}.dump(2) << "\n";
            else
                print_lines(terms);
            return kOk;
        }
        if (*verify) return run_verify(what, n, printed, o);
        if (*hom) return run_homology(false, n, module, ring, degree, o);
        if (*coh) return run_homology(true, n, module, ring, degree, o);
        if (*h3) {
            check_n(n, true, o);
            if (n < 2) throw UsageError("--n must be at least 2");
            const AbelianGroupInfo g = h3_via_q(n, o.unsafe_large);
            int status = kOk;
            json checks = json::array();
            std::vector<std::string> human;
            if (certificates) {
                if (n < 6) throw UsageError("--certificates needs --n >= 6");
                const H3CertificateReport rep = h3_certificates(n);
                for (const CertificateCheck& c : rep.checks) {
                    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
                    human.push_back(std::string(c.ok ? "PASS " : "FAIL ") + c.name + " | " + c.detail);
                }
                if (!rep.ok()) status = kFailed;
            }
            if (o.json) {
                json j{{"group", "S_" + std::to_string(n)}, {"module", "trivial"}, {"ring", "Z"},
                       {"degree", 3}, {"direction", "homology"}, {"free_rank", g.free_rank},
                       {"invariant_factors", factors_json(g)}};
                if (certificates) j["certificates"] = checks;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "H_3(S_" << n << "; Z) = " << g.str() << "\n";
                for (const std::string& l : human) std::cout << l << "\n";
            }
            return status;
        }
        if (*d8) {
            const D8Report r = d8_suite();
            const json j{{"tuples", r.tuples},
                         {"coboundary_nonzero", r.coboundary_nonzero},
                         {"c_is_cycle", r.c_is_cycle},
                         {"chi_on_c", r.chi_on_c},
                         {"h3", {{"group", "D8"}, {"module", "trivial"}, {"degree", 3}, {"direction", "homology"},
                                 {"free_rank", r.h3.free_rank}, {"invariant_factors", factors_json(r.h3)}}},
                         {"c_order", std::stoll(to_string(r.c_order))},
                         {"ok", r.ok()}};
            if (o.json) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "tuples " << r.tuples << ", nonzero coboundaries " << r.coboundary_nonzero << "\n"
                          << "c is a cycle: " << (r.c_is_cycle ? "yes" : "no") << ", chi(c) = " << r.chi_on_c << "\n"
                          << "H_3(D8) = " << r.h3.str() << ", order of [c] = " << to_string(r.c_order) << "\n"
                          << (r.ok() ? "PASS" : "FAIL") << " d8-suite\n";
            }
            return r.ok() ? kOk : kFailed;
        }
        if (*transfer) {
            check_n(n, false, o);
            if (n < 4) throw UsageError("--n must be at least 4");
            const TransferReport t = transfer_check(n);
            if (o.json) {
                std::cout << json{{"n", n},
                                  {"cosets", t.cosets},
                                  {"value", t.value},
                                  {"identity_contribution", t.identity_contribution},
                                  {"orbits", {{"1", t.orbits[1]}, {"2", t.orbits[2]}, {"4", t.orbits[4]}}},
                                  {"size_four_orbits_vanish", t.size_four_orbits_vanish},
                                  {"ok", t.ok()}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "cosets " << t.cosets << ", value " << t.value << " mod 4, identity coset "
                          << t.identity_contribution << "\n"
                          << "orbits of size 1, 2, 4: " << t.orbits[1] << ", " << t.orbits[2] << ", " << t.orbits[4]
                          << "\n"
                          << (t.ok() ? "PASS" : "FAIL") << " transfer\n";
            }
            return t.ok() ? kOk : kFailed;
        }
        if (*exp) return run_export(n, kind, top, out_path, o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
