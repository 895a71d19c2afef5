#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "funlat/commands.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) funlat::fail(funlat::errc::schema_error, "cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit_error(const char* code, const std::string& message) {
    nlohmann::json err{{"error", {{"code", code}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"funlat 0.1.0 - reduction of lattices over k[t] with rational length functions"};
    app.require_subcommand(1);

    std::string file;
    funlat::CommandOptions opts;
    long r_value = 0, bound_value = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", file, "lattice file (JSON), or - for stdin")->required();
        sub->add_flag("--trace", opts.trace, "emit per-step reduction records");
        sub->add_flag("--transition", opts.transition,
                      "accumulate and emit the GL_n(k[t]) transition matrix");
        sub->add_flag("--pipeline", opts.pipeline,
                      "semi-reduce with the ceiling norm before reducing");
        return sub;
    };

    auto* reduce = add_common(app.add_subcommand("reduce", "compute a reduced basis"));
    auto* check = add_common(app.add_subcommand("check", "test whether the basis is reduced"));
    auto* minima = add_common(app.add_subcommand("minima", "compute the successive minima"));
    auto* dim = add_common(app.add_subcommand("dim", "dimension and k-basis table of L_{<=r}"));
    dim->add_option("--r", r_value, "sublevel radius r")->required();
    auto* oracle =
        add_common(app.add_subcommand("oracle", "brute-force successive minima (finite fields)"));
    oracle->add_option("--bound", bound_value, "coefficient degree bound")->required();

    CLI11_PARSE(app, argc, argv);

    std::string name;
    if (reduce->parsed()) name = "reduce";
    if (check->parsed()) name = "check";
    if (minima->parsed()) name = "minima";
    if (dim->parsed()) {
        name = "dim";
        opts.r = r_value;
    }
    if (oracle->parsed()) {
        name = "oracle";
        opts.bound = bound_value;
    }

    try {
        auto outcome = funlat::run_command(name, read_file(file), opts);
        std::cout << outcome.report.dump(2) << "\n";
        return outcome.exit_code;
    } catch (const funlat::error& e) {
        emit_error(e.code_name(), e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("InternalError", e.what());
        return 1;
    }
}
