#include "geolab/runner.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"exact checks for Dirac-type structures on E1(M)"};
    app.require_subcommand(1);

    CLI::App* check = app.add_subcommand("check", "run the checks of a scene file");
    std::string file;
    std::string report_format = "text";
    std::string out_path;
    unsigned long seed = geolab::kDefaultSeed;
    int samples = geolab::kDefaultSamples;
    bool strict = false;
    bool timings = false;
    check->add_option("file", file, "scene file")->required();
    check->add_option("--report", report_format, "report format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    check->add_option("--out", out_path, "write the report to this path");
    check->add_option("--seed", seed, "seed for sample point generation");
    check->add_option("--samples", samples, "sample points per positivity scan")
        ->check(CLI::PositiveNumber);
    check->add_flag("--strict", strict, "treat generic-pass as fail");
    check->add_flag("--timings", timings, "record wall times (breaks byte stability)");

    CLI11_PARSE(app, argc, argv);

    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot read '" << file << "'\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    geolab::Scene scene;
    try {
        scene = geolab::parse_scene(buf.str());
    } catch (const geolab::ParseError& err) {
        std::cerr << "error: " << file << ":" << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    geolab::Report rep = geolab::run_checks(scene, seed, samples, timings);
    std::string text = geolab::emit_report(rep, report_format == "json");

    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        out << text;
    }
    return geolab::report_exit_code(rep, strict);
}
