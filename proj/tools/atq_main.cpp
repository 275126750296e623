#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atq/catalog.hpp"
#include "atq/errors.hpp"
#include "atq/json_io.hpp"
#include "atq/mv.hpp"
#include "atq/svg.hpp"

using nlohmann::json;

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw atq::DomainError("io_error", "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_text(const std::string& text)
{
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw atq::DomainError("bad_json", "input is not valid JSON");
    return j;
}

enum class InputKind { Polygon, Diagram, Closed, Semitoric };

InputKind sniff(const json& j)
{
    if (!j.is_object())
        throw atq::DomainError("bad_json", "expected a JSON object");
    if (j.contains("vertices"))
        return InputKind::Polygon;
    if (j.contains("polygon"))
        return InputKind::Diagram;
    if (j.contains("half_a"))
        return InputKind::Closed;
    if (j.contains("region"))
        return InputKind::Semitoric;
    throw atq::DomainError(
        "bad_json",
        "unrecognized input; expected a polygon, diagram, closed base, or "
        "semitoric model");
}

atq::Diagram load_diagram(const json& j)
{
    switch (sniff(j)) {
    case InputKind::Polygon:
        return atq::Diagram{atq::polygon_from_json(j), {}, {}};
    case InputKind::Diagram:
        return atq::diagram_from_json(j);
    default:
        throw atq::DomainError("bad_input",
                               "this command expects a polygon or diagram");
    }
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

atq::Window parse_window(const std::string& text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 4)
        throw atq::DomainError("bad_argument", "--window wants x0,y0,x1,y1");
    return atq::Window{
        atq::parse_rational(parts[0]), atq::parse_rational(parts[1]),
        atq::parse_rational(parts[2]), atq::parse_rational(parts[3])};
}

std::map<std::string, atq::Rational> parse_kv(const std::string& item,
                                              const char* what)
{
    std::map<std::string, atq::Rational> out;
    for (const std::string& piece : split(item, ',')) {
        const auto eq = piece.find('=');
        if (eq == std::string::npos || eq == 0)
            throw atq::DomainError("bad_argument",
                                   std::string(what) + " wants key=value, got "
                                       + piece);
        out[piece.substr(0, eq)] = atq::parse_rational(piece.substr(eq + 1));
    }
    return out;
}

std::size_t size_param(const std::map<std::string, atq::Rational>& kv,
                       const std::string& key, const char* what)
{
    const auto it = kv.find(key);
    if (it == kv.end())
        throw atq::DomainError("bad_argument",
                               std::string(what) + " needs " + key + "=...");
    if (!atq::is_integral(it->second) || it->second < 0)
        throw atq::DomainError("bad_argument",
                               key + " must be a non-negative integer");
    return numerator(it->second).convert_to<std::size_t>();
}

void print_json(const json& j)
{
    std::cout << atq::dump_canonical(j);
}

json info_for(const atq::Diagram& d)
{
    const atq::LatticePartition lattice = atq::lattice_points(d.polygon);
    json delzant = json::array();
    const auto& verts = d.polygon.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        delzant.push_back(atq::vertex_is_delzant(d.polygon, i));
    auto traded = d.traded_vertices;
    std::sort(traded.begin(), traded.end());
    return json{{"area", atq::rational_to_json(atq::area(d.polygon))},
                {"affine_perimeter",
                 atq::rational_to_json(atq::affine_perimeter(d.polygon))},
                {"interior_lattice_points", lattice.interior.size()},
                {"boundary_lattice_points", lattice.boundary.size()},
                {"vertex_count", verts.size()},
                {"vertex_delzant", std::move(delzant)},
                {"node_count", d.nodes.size()},
                {"traded_vertices", std::move(traded)}};
}

int cmd_validate(const std::string& input)
{
    const json j = parse_json_text(read_input(input));
    std::vector<atq::Violation> violations;
    switch (sniff(j)) {
    case InputKind::Polygon:
    case InputKind::Diagram:
        violations = atq::validate(load_diagram(j));
        break;
    case InputKind::Closed: {
        const atq::ClosedBase c = atq::closed_base_from_json(j);
        for (atq::Violation v : atq::validate(c.half_a)) {
            v.detail = "half_a: " + v.detail;
            violations.push_back(v);
        }
        for (atq::Violation v : atq::validate(c.half_b)) {
            v.detail = "half_b: " + v.detail;
            violations.push_back(v);
        }
        break;
    }
    case InputKind::Semitoric:
        throw atq::DomainError(
            "bad_input", "validate expects a polygon, diagram, or closed base");
    }
    print_json(atq::violations_to_json(violations));
    return violations.empty() ? 0 : 1;
}

int cmd_info(const std::string& input)
{
    const json j = parse_json_text(read_input(input));
    switch (sniff(j)) {
    case InputKind::Polygon:
    case InputKind::Diagram:
        print_json(info_for(load_diagram(j)));
        break;
    case InputKind::Closed: {
        const atq::ClosedBase c = atq::closed_base_from_json(j);
        print_json(json{{"half_a", info_for(c.half_a)},
                        {"half_b", info_for(c.half_b)},
                        {"gluing_note", c.gluing_note},
                        {"tag", c.tag}});
        break;
    }
    case InputKind::Semitoric: {
        const atq::SemitoricModel m = atq::semitoric_from_json(j);
        print_json(
            json{{"kind", "semitoric"}, {"node_count", m.nodes.size()}});
        break;
    }
    }
    return 0;
}

int cmd_quantize(const std::string& input, const std::string& window_text)
{
    const json j = parse_json_text(read_input(input));
    const InputKind kind = sniff(j);
    if (kind == InputKind::Semitoric) {
        if (window_text.empty())
            throw atq::DomainError(
                "missing_window", "semitoric input needs --window x0,y0,x1,y1");
        const atq::SemitoricModel m = atq::semitoric_from_json(j);
        print_json(atq::report_to_json(atq::quantize_semitoric(
            m.region, m.nodes, parse_window(window_text))));
        return 0;
    }
    if (!window_text.empty())
        throw atq::DomainError("window_not_applicable",
                               "--window only applies to semitoric input");
    if (kind == InputKind::Closed) {
        print_json(atq::report_to_json(
            atq::report_for(atq::closed_base_from_json(j))));
        return 0;
    }
    print_json(atq::report_to_json(atq::report_for(load_diagram(j))));
    return 0;
}

int cmd_trade(const std::string& input, const std::vector<std::string>& specs)
{
    atq::Diagram d = load_diagram(parse_json_text(read_input(input)));
    for (const std::string& spec : specs) {
        const auto kv = parse_kv(spec, "--trade");
        for (const auto& [key, value] : kv)
            if (key != "vertex" && key != "t" && key != "k")
                throw atq::DomainError("bad_argument",
                                       "--trade does not take " + key);
        const auto t = kv.find("t");
        if (t == kv.end())
            throw atq::DomainError("bad_argument", "--trade needs t=...");
        int multiplicity = 1;
        if (const auto k = kv.find("k"); k != kv.end()) {
            if (!atq::is_integral(k->second))
                throw atq::DomainError("bad_argument", "k must be an integer");
            multiplicity = numerator(k->second).convert_to<int>();
        }
        d = atq::nodal_trade(d, size_param(kv, "vertex", "--trade"), t->second,
                             multiplicity);
    }
    print_json(atq::diagram_to_json(d));
    return 0;
}

int cmd_slide(const std::string& input, const std::vector<std::string>& specs)
{
    atq::Diagram d = load_diagram(parse_json_text(read_input(input)));
    for (const std::string& spec : specs) {
        const auto kv = parse_kv(spec, "--slide");
        for (const auto& [key, value] : kv)
            if (key != "node" && key != "t")
                throw atq::DomainError("bad_argument",
                                       "--slide does not take " + key);
        const auto t = kv.find("t");
        if (t == kv.end())
            throw atq::DomainError("bad_argument", "--slide needs t=...");
        d = atq::nodal_slide(d, size_param(kv, "node", "--slide"), t->second);
    }
    print_json(atq::diagram_to_json(d));
    return 0;
}

int cmd_sum(const std::string& first, const std::string& second,
            const std::string& tag, bool assume_incompatible)
{
    const atq::Diagram a = load_diagram(parse_json_text(read_input(first)));
    const atq::Diagram b = load_diagram(parse_json_text(read_input(second)));
    print_json(atq::closed_base_to_json(
        atq::symplectic_sum(a, b, !assume_incompatible, tag)));
    return 0;
}

int cmd_mv(int nodes, bool non_compact, bool no_bs)
{
    atq::FFCovering cover;
    cover.nodes = nodes;
    cover.compact_fiber = !non_compact;
    cover.bohr_sommerfeld = !no_bs;
    const atq::FreeModuleMap map = atq::build_ff_covering_map(cover);
    const atq::KernelCokernel kc = atq::kernel_cokernel(map);
    json matrix = json::array();
    for (Eigen::Index r = 0; r < map.matrix().rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < map.matrix().cols(); ++c)
            row.push_back(map.matrix()(r, c).convert_to<std::int64_t>());
        matrix.push_back(std::move(row));
    }
    json covering = json{{"domain_rank", map.domain().rank},
                         {"codomain_rank", map.codomain().rank},
                         {"coeff", "smooth"},
                         {"matrix", std::move(matrix)}};
    print_json(
        json{{"covering", std::move(covering)},
             {"kernel_rank", kc.kernel_rank},
             {"cokernel_rank", kc.cokernel_rank},
             {"graded", atq::graded_to_json(atq::local_ff_quantization(cover))}});
    return 0;
}

int cmd_kunneth(bool have_model, int model_n,
                const std::vector<std::string>& inputs)
{
    atq::GradedQuant result;
    if (have_model) {
        if (!inputs.empty())
            throw atq::DomainError("bad_argument",
                                   "--prop-model replaces the graded inputs");
        result = atq::prop_kunn_model(model_n);
    } else {
        if (inputs.size() != 2)
            throw atq::DomainError(
                "bad_argument",
                "kunneth wants two graded inputs or --prop-model N");
        result = atq::kunneth(
            atq::graded_from_json(parse_json_text(read_input(inputs[0]))),
            atq::graded_from_json(parse_json_text(read_input(inputs[1]))));
    }
    print_json(atq::graded_to_json(result));
    return 0;
}

int cmd_catalog_list()
{
    json out = json::array();
    for (const atq::ExampleSpec& e : atq::catalog_entries()) {
        json params = json::object();
        for (const auto& [key, value] : e.parameters)
            params[key] = atq::rational_to_json(value);
        out.push_back(json{{"name", e.name},
                           {"parameters", std::move(params)},
                           {"summary", e.summary}});
    }
    print_json(out);
    return 0;
}

int cmd_catalog_build(const std::string& name,
                      const std::vector<std::string>& param_specs)
{
    std::map<std::string, atq::Rational> overrides;
    for (const std::string& spec : param_specs)
        for (const auto& [key, value] : parse_kv(spec, "--param"))
            overrides[key] = value;
    const atq::BuiltExample built = atq::build_example(name, overrides);
    if (const auto* poly = std::get_if<atq::RatPolygon>(&built)) {
        print_json(atq::polygon_to_json(*poly));
    } else if (const auto* d = std::get_if<atq::Diagram>(&built)) {
        print_json(atq::diagram_to_json(*d));
    } else if (const auto* c = std::get_if<atq::ClosedBase>(&built)) {
        print_json(atq::closed_base_to_json(*c));
    } else if (const auto* m = std::get_if<atq::SemitoricModel>(&built)) {
        print_json(atq::semitoric_to_json(*m));
    } else {
        const auto& sample = std::get<atq::MomentSample>(built);
        std::string buf;
        char line[80];
        for (const auto& row : sample.rows) {
            std::snprintf(line, sizeof line, "%.17g,%.17g\n", row[0], row[1]);
            buf += line;
        }
        std::cout << buf;
    }
    return 0;
}

int cmd_render(const std::string& input, const std::string& format)
{
    const json j = parse_json_text(read_input(input));
    const InputKind kind = sniff(j);
    if (format == "json") {
        switch (kind) {
        case InputKind::Polygon:
            print_json(atq::polygon_to_json(atq::polygon_from_json(j)));
            break;
        case InputKind::Diagram:
            print_json(atq::diagram_to_json(atq::diagram_from_json(j)));
            break;
        case InputKind::Closed:
            print_json(
                atq::closed_base_to_json(atq::closed_base_from_json(j)));
            break;
        case InputKind::Semitoric:
            print_json(atq::semitoric_to_json(atq::semitoric_from_json(j)));
            break;
        }
        return 0;
    }
    if (format != "svg")
        throw atq::DomainError("bad_argument", "--format must be svg or json");
    if (kind == InputKind::Closed)
        std::cout << atq::render_svg(atq::closed_base_from_json(j));
    else
        std::cout << atq::render_svg(load_diagram(j));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact quantization toolkit for almost toric base diagrams"};
    app.require_subcommand(1);

    std::string validate_input;
    CLI::App* validate = app.add_subcommand(
        "validate", "check the structural invariants of a diagram");
    validate
        ->add_option("input", validate_input, "JSON input file, or - for stdin")
        ->required();

    std::string info_input;
    CLI::App* info =
        app.add_subcommand("info", "lattice and affine statistics of an input");
    info->add_option("input", info_input, "JSON input file, or - for stdin")
        ->required();

    std::string quantize_input;
    std::string quantize_window;
    CLI::App* quantize =
        app.add_subcommand("quantize", "quantize an input and print a report");
    quantize
        ->add_option("input", quantize_input, "JSON input file, or - for stdin")
        ->required();
    quantize->add_option("--window", quantize_window,
                         "x0,y0,x1,y1 scan window (semitoric input)");

    std::string trade_input;
    std::vector<std::string> trade_specs;
    CLI::App* trade = app.add_subcommand(
        "trade", "replace corners by interior nodes with cuts");
    trade->add_option("input", trade_input, "JSON input file, or - for stdin")
        ->required();
    trade->add_option("--trade", trade_specs, "vertex=I,t=R[,k=N]; repeatable")
        ->required()
        ->type_size(1)
        ->allow_extra_args(false);

    std::string slide_input;
    std::vector<std::string> slide_specs;
    CLI::App* slide =
        app.add_subcommand("slide", "move nodes along their cut rays");
    slide->add_option("input", slide_input, "JSON input file, or - for stdin")
        ->required();
    slide->add_option("--slide", slide_specs, "node=I,t=R; repeatable")
        ->required()
        ->type_size(1)
        ->allow_extra_args(false);

    std::string sum_first, sum_second, sum_tag;
    bool sum_incompatible = false;
    CLI::App* sum = app.add_subcommand(
        "sum", "glue two fully traded diagrams into a closed base");
    sum->add_option("first", sum_first, "JSON input file, or - for stdin")
        ->required();
    sum->add_option("second", sum_second, "JSON input file")->required();
    sum->add_option("--tag", sum_tag, "label stored on the result");
    sum->add_flag("--assume-incompatible", sum_incompatible,
                  "treat the boundary data as prequantum incompatible");

    int mv_nodes = 1;
    bool mv_compact = true;
    bool mv_bs = true;
    CLI::App* mv = app.add_subcommand(
        "mv", "solve the local covering problem for a focus-focus fiber");
    mv->add_option("--nodes", mv_nodes, "number of nodes on the fiber")
        ->required();
    mv->add_flag("--compact,!--non-compact", mv_compact,
                 "cyclic fiber (default) versus an infinite chain");
    mv->add_flag("--bs,!--no-bs", mv_bs,
                 "fiber meets the Bohr-Sommerfeld condition (default)");

    int kunneth_model = 0;
    std::vector<std::string> kunneth_inputs;
    CLI::App* kunneth = app.add_subcommand(
        "kunneth", "graded tensor product of two quantizations");
    kunneth->add_option("inputs", kunneth_inputs, "two graded JSON inputs")
        ->expected(0, 2);
    kunneth->add_option("--prop-model", kunneth_model,
                        "cotangent-times-cylinder model with N fiber points");

    CLI::App* catalog = app.add_subcommand("catalog", "built-in example inputs");
    catalog->require_subcommand(1);
    CLI::App* catalog_list =
        catalog->add_subcommand("list", "list example names and parameters");
    std::string build_name;
    std::vector<std::string> build_params;
    CLI::App* catalog_build =
        catalog->add_subcommand("build", "print one example to stdout");
    catalog_build
        ->add_option("name", build_name, "example name from catalog list")
        ->required();
    catalog_build
        ->add_option("--param", build_params,
                     "key=value parameter override; repeatable")
        ->type_size(1)
        ->allow_extra_args(false);

    std::string render_input;
    std::string render_format = "svg";
    CLI::App* render = app.add_subcommand("render", "draw an input");
    render->add_option("input", render_input, "JSON input file, or - for stdin")
        ->required();
    render->add_option("--format", render_format, "svg (default) or json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (validate->parsed())
            return cmd_validate(validate_input);
        if (info->parsed())
            return cmd_info(info_input);
        if (quantize->parsed())
            return cmd_quantize(quantize_input, quantize_window);
        if (trade->parsed())
            return cmd_trade(trade_input, trade_specs);
        if (slide->parsed())
            return cmd_slide(slide_input, slide_specs);
        if (sum->parsed())
            return cmd_sum(sum_first, sum_second, sum_tag, sum_incompatible);
        if (mv->parsed())
            return cmd_mv(mv_nodes, !mv_compact, !mv_bs);
        if (kunneth->parsed())
            return cmd_kunneth(kunneth->count("--prop-model") > 0,
                               kunneth_model, kunneth_inputs);
        if (catalog->parsed()) {
            if (catalog_list->parsed())
                return cmd_catalog_list();
            if (catalog_build->parsed())
                return cmd_catalog_build(build_name, build_params);
        }
        if (render->parsed())
            return cmd_render(render_input, render_format);
        return 2;
    } catch (const atq::DomainError& e) {
        std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << json{{"error", "bad_json"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
}
