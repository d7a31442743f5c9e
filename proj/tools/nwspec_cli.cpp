// Command line driver: spectral pairs and mixed Hodge data of convenient
// non-degenerate germs from Newton-polyhedron combinatorics.
#include "nwspec/fixtures.hpp"
#include "nwspec/parse.hpp"
#include "nwspec/result.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"Newton-boundary spectral pairs of isolated hypersurface singularities"};

    std::string germ_text;
    std::string vars_csv;
    std::string format = "table";
    std::string fixture;
    std::string out_path;
    bool run_check = false;
    bool no_nondeg = false;

    app.add_option("-f,--germ", germ_text, "germ polynomial (caret or compressed syntax)");
    app.add_option("--vars", vars_csv, "comma-separated variable names");
    app.add_option("--format", format, "output format: json|spp|table")
        ->check(CLI::IsMember({"json", "spp", "table"}));
    app.add_flag("--check", run_check, "run the brute-force oracles and cross-checks");
    app.add_flag("--no-nondegeneracy-check", no_nondeg,
                 "assert nondegeneracy instead of certifying it");
    app.add_option("--fixture", fixture, "built-in example germ: f1|f2|f3")
        ->check(CLI::IsMember({"f1", "f2", "f3"}));
    app.add_option("--out", out_path, "write the result to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        nwspec::Germ germ;
        if (!fixture.empty()) {
            const auto& fx = nwspec::fixtures::get(fixture);
            germ = nwspec::parse_germ(fx.germ, fx.vars);
        } else {
            if (germ_text.empty()) {
                std::cerr << "error: provide --germ with --vars, or --fixture\n";
                return 2;
            }
            std::vector<std::string> vars;
            std::stringstream ss(vars_csv);
            std::string item;
            while (std::getline(ss, item, ',')) {
                if (!item.empty()) vars.push_back(item);
            }
            if (vars.empty()) {
                std::cerr << "error: --vars is required with --germ\n";
                return 2;
            }
            germ = nwspec::parse_germ(germ_text, vars);
        }

        nwspec::ComputeOptions opt;
        opt.check_nondegeneracy = !no_nondeg;
        opt.run_oracles = run_check;
        auto result = nwspec::compute(germ, opt);

        std::string payload;
        if (format == "json") payload = nwspec::result_json(result);
        else if (format == "spp") payload = nwspec::emit_spp(result.spp);
        else payload = nwspec::result_table(result);

        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
            out << payload << "\n";
        } else {
            std::cout << payload << "\n";
        }
        return 0;
    } catch (const nwspec::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const nwspec::precondition_error& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const nwspec::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
