#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qgr/cli/commands.hpp"

using qgr::cli::RunConfig;

int main(int argc, char** argv) {
    CLI::App app{"Exact J-function series for complete intersections in Gr(2,n)"};
    app.set_config("--config", "", "flat key=value file; flags override it");
    app.fallthrough();
    app.require_subcommand(1, 1);

    RunConfig c;
    std::string a_str, alpha_str, flip_str, output;
    app.add_option("--n", c.n, "Gr(2,n)");
    app.add_option("--a", a_str, "degrees, comma separated (may be empty)")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--qdeg", c.D, "q truncation degree");
    app.add_option("--zdeg", c.Nz, "z truncation degree");
    app.add_option("--depth", c.depth, "Laurent depth for fixed-point expansions (default n*qdeg + 2(n-2) + 2)");
    app.add_option("--alpha", alpha_str, "weights, comma separated")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--alpha-mode", c.alpha_mode, "auto | zero | default | explicit");
    app.add_option("--kind", c.kind, "series kind, or dot|ddot for y-gamma");
    app.add_option("--suite", c.suite, "verification suite");
    app.add_option("--k", c.k, "class degree");
    app.add_option("--j", c.j, "class index within degree k");
    app.add_flag("--equivariant", c.equivariant, "include fixed-point data");
    app.add_option("--flip", flip_str, "negate the (d1,d2) summand of the dot series")->delimiter(',')->multi_option_policy(CLI::MultiOptionPolicy::Join);
    app.add_option("--output", output, "write JSON here instead of stdout");

    for (const char* name : {"series", "verify", "cohomology", "y-gamma", "double-j"}) app.add_subcommand(name);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    c.command = app.get_subcommands().front()->get_name();

    try {
        c.a = qgr::cli::parse_a(a_str);
        c.alpha = qgr::cli::parse_alpha(alpha_str);
        if (!c.alpha.empty() && c.alpha_mode == "auto") c.alpha_mode = "explicit";
        if (!flip_str.empty()) {
            auto f = qgr::cli::parse_a(flip_str);
            if (f.a.size() != 2) throw qgr::cli::ConfigError("--flip needs d1,d2");
            c.flip = std::make_pair(f.a[0], f.a[1]);
        }
        if (const char* env = std::getenv("QGR_DEPTH")) {
            std::size_t pos = 0;
            std::string s(env);
            int v = -1;
            try {
                v = std::stoi(s, &pos);
            } catch (const std::exception&) {
                pos = 0;
            }
            if (pos == 0 || pos != s.size() || v < 1) throw qgr::cli::ConfigError("QGR_DEPTH must be an integer");
            c.depth = v;
        }
    } catch (const qgr::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (output.empty()) return qgr::cli::run(c, std::cout, std::cerr);
    std::ostringstream buf;
    int code = qgr::cli::run(c, buf, std::cerr);
    if (code == 2) return code;
    std::ofstream f(output);
    if (!f) {
        std::cerr << "error: cannot write " << output << "\n";
        return 2;
    }
    f << buf.str();
    return code;
}
