// Command-line front end: constructions and verification suites with JSON or
// CSV reports.  Exit code 0 when every check passes, 2 on a verification
// failure (the first counterexample is serialized), 1 on usage or resource
// errors.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ribbonres/derived.hpp"
#include "ribbonres/poset.hpp"
#include "ribbonres/ribbon_complex.hpp"
#include "ribbonres/schur.hpp"
#include "ribbonres/suites.hpp"
#include "ribbonres/sympoly.hpp"
#include "ribbonres/util.hpp"
#include "ribbonres/veronese.hpp"

using namespace ribbonres;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    bool timing = true;
};

Composition parse_composition(const std::string& s) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) parts.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return Composition(std::move(parts));
}

int emit(const Report& rep, const std::string& command, const json& params,
         const OutputOptions& out) {
    std::string payload;
    if (out.format == "csv") {
        payload = rep.to_csv(out.timing);
    } else {
        json doc;
        doc["command"] = command;
        doc["params"] = params;
        doc["checks"] = rep.to_json(out.timing);
        doc["all_pass"] = rep.all_pass();
        payload = doc.dump(2) + "\n";
    }
    if (out.out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(out.out_path);
        if (!f) throw ResourceError("cannot open output file " + out.out_path);
        f << payload;
    }
    if (!rep.all_pass()) {
        if (const CheckResult* fail = rep.first_failure())
            std::cerr << "verification failure: " << fail->check << " "
                      << fail->params.dump() << " -> " << fail->computed.dump() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for ribbon resolutions of Veronese modules"};
    app.require_subcommand(1);

    app.fallthrough();
    OutputOptions out;
    int threads = 0;
    bool no_timing = false;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", out.out_path, "write the report to a file");
    app.add_option("--threads", threads, "worker pool size (default: all cores)");
    app.add_flag("--no-timing", no_timing, "zero out the millis column for byte-stable reports");

    std::string ring_spec = "q";
    int d = 2, r = 1, rp = 1, n = 2, i_index = 1, i_max = 3, deg_max = -1, t_max = -1;
    bool multigraded = false;

    auto* c_resolve = app.add_subcommand("resolve", "build and verify a resolution window");
    c_resolve->add_option("--d", d)->required();
    c_resolve->add_option("--r", r)->required();
    c_resolve->add_option("--n", n)->required();
    c_resolve->add_option("--ring", ring_spec);
    c_resolve->add_option("--imax", i_max);
    c_resolve->add_option("--degmax", deg_max);

    auto* c_betti = app.add_subcommand("betti", "Betti numbers of a Veronese module");
    c_betti->add_option("--d", d)->required();
    c_betti->add_option("--r", r)->required();
    c_betti->add_option("--n", n)->required();
    c_betti->add_option("--i", i_index)->required();
    c_betti->add_option("--ring", ring_spec);

    auto* c_tor = app.add_subcommand("tor", "higher Tor between two Veronese modules");
    c_tor->add_option("--d", d)->required();
    c_tor->add_option("--r", r)->required();
    c_tor->add_option("--rprime", rp)->required();
    c_tor->add_option("--n", n)->required();
    c_tor->add_option("--i", i_index)->required();
    c_tor->add_option("--ring", ring_spec);
    c_tor->add_option("--degmax", deg_max);
    c_tor->add_flag("--multigraded", multigraded);

    auto* c_tensor = app.add_subcommand("tensor", "tensor product of two Veronese modules");
    c_tensor->add_option("--d", d)->required();
    c_tensor->add_option("--r", r)->required();
    c_tensor->add_option("--rprime", rp)->required();
    c_tensor->add_option("--n", n)->required();
    c_tensor->add_option("--ring", ring_spec);
    c_tensor->add_option("--degmax", deg_max);

    auto* c_hom = app.add_subcommand("hom", "Hom between two Veronese modules");
    c_hom->add_option("--d", d)->required();
    c_hom->add_option("--r", r)->required();
    c_hom->add_option("--rprime", rp)->required();
    c_hom->add_option("--n", n)->required();
    c_hom->add_option("--ring", ring_spec);
    c_hom->add_option("--tmax", t_max);

    std::string alpha_str;
    auto* c_poset = app.add_subcommand("poset", "rank-selected Boolean lattice homology");
    c_poset->add_option("--alpha", alpha_str, "composition for the rank selection");
    c_poset->add_option("--d", d);
    c_poset->add_option("--r", r);
    c_poset->add_option("--i", i_index);
    c_poset->add_option("--n", n);

    auto* c_sym = app.add_subcommand("symcheck", "symmetric polynomial identities");
    c_sym->add_option("--d", d);
    c_sym->add_option("--r", r);
    c_sym->add_option("--n", n);

    std::string only_ring;
    int only_n = 0;
    auto* c_all = app.add_subcommand("verify-all", "run the complete verification grid");
    c_all->add_option("--n", only_n, "restrict to one alphabet size");
    c_all->add_option("--ring", only_ring, "restrict to one ring");

    try {
        app.parse(argc, argv);
        if (threads > 0) set_default_threads(threads);
        out.timing = !no_timing;
        CoefficientRing ring = CoefficientRing::parse(ring_spec);

        if (*c_resolve) {
            if (deg_max < 0) deg_max = r + 4 * d;
            ResolutionWindow w = build_resolution(d, r, n, ring, i_max, deg_max);
            Report rep;
            json shapes = json::array();
            for (int i = 0; i <= i_max; ++i) {
                std::vector<int> parts(i, d);
                parts.push_back(r);
                shapes.push_back(json{{"i", i}, {"shape", Composition(parts).str()},
                                      {"generator_degree", d * i + r},
                                      {"dim", w.steps[i]->dim()}});
            }
            json params{{"d", d}, {"r", r}, {"n", n}, {"ring", ring.str()}};
            CheckResult head;
            head.check = "resolution_window";
            head.anchor = "ribbon shapes and generator degrees of the window";
            head.params = params;
            head.expected = "";
            head.computed = shapes;
            head.pass = true;
            rep.add(std::move(head));
            rep.merge(verify_exactness(w));
            rep.merge(verify_minimality(w));
            return emit(rep, "resolve", params, out);
        }
        if (*c_betti) {
            BettiEntry be = betti(d, r, n, i_index, ring);
            json params{{"d", d}, {"r", r}, {"n", n}, {"i", i_index}};
            Report rep;
            CheckResult c;
            c.check = "betti";
            c.anchor = "Betti number of the Veronese module";
            c.params = params;
            c.expected = "";
            c.computed = json{{"degree", be.degree}, {"dim", be.dim}};
            c.pass = true;
            rep.add(std::move(c));
            return emit(rep, "betti", params, out);
        }
        if (*c_tor) {
            if (deg_max < 0) deg_max = d * i_index + r + rp + 2 * d;
            Report rep = tor(d, r, rp, n, ring, i_index, deg_max, multigraded);
            return emit(rep, "tor",
                        json{{"d", d}, {"r", r}, {"rprime", rp}, {"n", n}, {"i", i_index}},
                        out);
        }
        if (*c_tensor) {
            if (deg_max < 0) deg_max = r + rp + 3 * d;
            Report rep = tensor_dims(d, r, rp, n, ring, deg_max);
            rep.merge(splitting_psi(d, r, rp, n, deg_max, SplitKind::lex, ring));
            return emit(rep, "tensor",
                        json{{"d", d}, {"r", r}, {"rprime", rp}, {"n", n}}, out);
        }
        if (*c_hom) {
            if (t_max < 0) t_max = hom_shift(d, r, rp) + 3 * d;
            Report rep = hom_dims(d, r, rp, n, ring, t_max);
            return emit(rep, "hom",
                        json{{"d", d}, {"r", r}, {"rprime", rp}, {"n", n}}, out);
        }
        if (*c_poset) {
            Report rep;
            if (!alpha_str.empty())
                rep = verify_solomon(parse_composition(alpha_str));
            else
                rep = verify_tor_poset_link(d, r, i_index, std::min(n, 3));
            return emit(rep, "poset", json{{"alpha", alpha_str}, {"d", d}, {"r", r}}, out);
        }
        if (*c_sym) {
            Report rep = verify_veronese_series(d, r, n, 4);
            rep.merge(omega_stability_check(3, n));
            rep.merge(hamel_goulden_det({Composition({1}), Composition({1}), Composition({1})}, n));
            return emit(rep, "symcheck", json{{"d", d}, {"r", r}, {"n", n}}, out);
        }
        if (*c_all) {
            suites::SuiteOptions sopt;
            if (only_n > 0) sopt.only_n = only_n;
            if (!only_ring.empty()) sopt.only_ring = CoefficientRing::parse(only_ring);
            Report rep = suites::verify_all(sopt);
            return emit(rep, "verify-all", json{{"n", only_n}, {"ring", only_ring}}, out);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
