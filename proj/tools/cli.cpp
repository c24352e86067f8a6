#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "simploc/error.hpp"
#include "simploc/generators.hpp"
#include "simploc/io.hpp"
#include "simploc/metric.hpp"
#include "simploc/oracle.hpp"
#include "simploc/surgery.hpp"

namespace simploc::cli {

namespace {

std::string sha256_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0)
        EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, md, &len);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < len; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return hex.str();
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct Report {
    Json body;
    int exit_code = kOk;
};

Json input_entry(const std::string& path)
{
    return Json{{"path", path}, {"sha256", sha256_file(path)}};
}

// A complex file, or a disc file read through its 1-skeleton.
FlagComplex load_complex(const Json& j)
{
    if (j.is_object() && j.contains("triangles") && !j.contains("vertices"))
        return disc_from_json(j).skeleton();
    return complex_from_json(j);
}

Json first_short_cycle(const FlagComplex& X, int k)
{
    Json witness = nullptr;
    if (k <= 4)
        return witness;
    for_each_induced_cycle(X, 4, k - 1, [&](std::span<const VertexId> c) {
        witness = vertices_json(X, {c.begin(), c.end()});
        return false;
    });
    return witness;
}

// ---------------------------------------------------------------------------

struct CheckArgs {
    std::string file;
    int k_large = 0;
    int locally_k_large = 0;
    int m_located = 0;
    bool w5hat = false;
    bool lws = false;
};

Report cmd_check(const CheckArgs& a)
{
    Timer total;
    Report r;
    const FlagComplex X = load_complex(read_json_file(a.file));
    CheckArgs c = a;
    if (!c.k_large && !c.locally_k_large && !c.m_located && !c.w5hat && !c.lws) {
        c.k_large = 5;
        c.locally_k_large = 5;
        c.m_located = 7;
        c.w5hat = true;
        c.lws = true;
    }
    Json checks = Json::object();
    Json timings = Json::object();
    bool all = true;
    auto record = [&](const char* name, Json result, const Timer& t) {
        all = all && result.at("verdict").get<bool>();
        timings[name] = t.ms();
        checks[name] = std::move(result);
    };
    if (c.k_large) {
        Timer t;
        if (c.k_large < 4)
            throw InputError("--k-large needs k >= 4");
        Json w = first_short_cycle(X, c.k_large);
        record("k_large", {{"k", c.k_large}, {"verdict", w.is_null()}, {"witness", w}}, t);
    }
    if (c.locally_k_large) {
        Timer t;
        if (c.locally_k_large < 4)
            throw InputError("--locally-k-large needs k >= 4");
        Json witness = nullptr;
        for (VertexId v = 0; v < X.size() && witness.is_null(); ++v) {
            const FlagComplex L = link_graph(X, v);
            Json w = first_short_cycle(L, c.locally_k_large);
            if (!w.is_null())
                witness = {{"vertex", label_json(X.label(v))}, {"cycle", w}};
        }
        record("locally_k_large", {{"k", c.locally_k_large}, {"verdict", witness.is_null()}, {"witness", witness}},
               t);
    }
    if (c.m_located) {
        Timer t;
        if (c.m_located < 4)
            throw InputError("--m-located needs m >= 4");
        Json rep = dwheel_report_json(X, is_m_located(X, c.m_located));
        rep["m"] = c.m_located;
        record("m_located", std::move(rep), t);
    }
    if (c.w5hat) {
        Timer t;
        record("w5hat", five_wheel_report_json(X, check_w5hat(X)), t);
    }
    if (c.lws) {
        Timer t;
        const bool five_large = is_k_large(X, 5);
        const bool w5 = check_w5hat(X).verdict;
        record("lws", {{"verdict", five_large && w5}, {"five_large", five_large}, {"w5hat", w5}}, t);
    }
    r.exit_code = all ? kOk : kFalse;
    timings["total"] = total.ms();
    r.body = {{"command", "check"},
              {"inputs", {input_entry(a.file)}},
              {"complex", {{"vertices", X.size()}, {"edges", X.edge_count()}}},
              {"verdict", all},
              {"checks", std::move(checks)},
              {"exit_code", r.exit_code},
              {"timings_ms", std::move(timings)}};
    return r;
}

struct ReduceArgs {
    std::string file;
    std::string target;
    std::string out;
};

Report cmd_reduce(const ReduceArgs& a)
{
    Timer total;
    Json inputs = {input_entry(a.file)};
    std::shared_ptr<const FlagComplex> target;
    if (!a.target.empty()) {
        target = std::make_shared<const FlagComplex>(load_complex(read_json_file(a.target)));
        inputs.push_back(input_entry(a.target));
    }
    const DiscDiagram d = diagram_from_json(read_json_file(a.file), target);
    const ReduceResult result = reduce(d);
    Json trace = Json::array();
    for (const auto& c : result.trace)
        trace.push_back(certificate_json(c));
    Json reduced = diagram_to_json(result.diagram);
    if (!a.out.empty())
        write_text_file(a.out, reduced.dump(2) + "\n");
    Report r;
    r.body = {{"command", "reduce"},
              {"inputs", std::move(inputs)},
              {"area_before", area(d)},
              {"area_after", area(result.diagram)},
              {"trace", std::move(trace)},
              {"diagram", std::move(reduced)},
              {"exit_code", kOk},
              {"timings_ms", {{"total", total.ms()}}}};
    return r;
}

struct MinimizeArgs {
    std::string file;
    std::string loop;
    int cap = 10;
    int max_diagrams = 1000;
};

Report cmd_minimize(const MinimizeArgs& a)
{
    Timer total;
    auto X = std::make_shared<const FlagComplex>(load_complex(read_json_file(a.file)));
    Cycle loop;
    std::stringstream ss(a.loop);
    for (std::string item; std::getline(ss, item, ',');)
        loop.vertices.push_back(X->id_of(item));
    OracleOptions options;
    options.max_diagrams = a.max_diagrams;
    if (const char* env = std::getenv("SIMPLOC_MAX_CAP")) {
        int guard = 0;
        try {
            guard = std::stoi(env);
        } catch (const std::exception&) {
            throw InputError("SIMPLOC_MAX_CAP must be an integer");
        }
        options.max_cap = std::max(options.max_cap, guard);
        options.max_loop = std::max(options.max_loop, guard);
    }
    if (a.cap < 1)
        throw InputError("--cap must be positive");
    const OracleResult result = brute_force_min_diagram(X, loop, a.cap, options);
    Report r;
    r.exit_code = result.status == OracleStatus::Found ? kOk : kFalse;
    r.body = {{"command", "minimize"},
              {"inputs", {input_entry(a.file)}},
              {"loop", vertices_json(*X, loop.vertices)},
              {"area_cap", a.cap},
              {"result", oracle_result_json(result)},
              {"exit_code", r.exit_code},
              {"timings_ms", {{"total", total.ms()}}}};
    return r;
}

struct MetrizeArgs {
    std::string file;
    std::string svg;
};

Report cmd_metrize(const MetrizeArgs& a)
{
    Timer total;
    const SimplicialDisc D = disc_from_json(read_json_file(a.file));
    Report r;
    r.body = {{"command", "metrize"}, {"inputs", {input_entry(a.file)}}};
    try {
        const MetrizedDisc M = metrize(D);
        r.body["metric"] = metric_report_json(M);
        r.body["cat0"] = is_cat0(M).cat0;
        r.exit_code = is_cat0(M).cat0 ? kOk : kFalse;
        if (!a.svg.empty())
            write_text_file(a.svg, export_svg(M));
    } catch (const MetricUndefined& e) {
        r.body["cat0"] = nullptr;
        r.body["error"] = {{"kind", "METRIC_UNDEFINED"},
                           {"message", e.what()},
                           {"centers", Json::array()}};
        for (int c : {e.first_center, e.second_center})
            if (c >= 0)
                r.body["error"]["centers"].push_back(c);
        r.exit_code = kFalse;
    }
    r.body["exit_code"] = r.exit_code;
    r.body["timings_ms"] = {{"total", total.ms()}};
    return r;
}

Report cmd_bound(int n)
{
    const auto b = isoperimetric_bound(n);
    Report r;
    r.body = {{"command", "bound"},
              {"n", n},
              {"bound", b.value},
              {"triangles", b.triangles},
              {"metric_area_bound", static_cast<double>(n) * n / (4.0 * std::numbers::pi)},
              {"exit_code", kOk}};
    return r;
}

struct GenerateArgs {
    std::string kind;
    std::string base;
    GeneratorSpec spec;
    bool nonplanar = false;
    bool flag_only = false;
    std::string out;
};

Report cmd_generate(GenerateArgs a, std::string& fixture)
{
    Timer total;
    a.spec.kind = generator_kind_from_string(a.kind);
    a.spec.planar = !a.nonplanar;
    a.spec.located = !a.flag_only;
    if (a.spec.kind == GeneratorKind::Cone && !a.base.empty()) {
        auto base = std::make_shared<GeneratorSpec>(a.spec);
        base->kind = generator_kind_from_string(a.base);
        if (base->kind == GeneratorKind::Cone)
            throw InputError("--base cannot itself be a cone");
        a.spec.base = std::move(base);
    }
    const Generated g = generate(a.spec);
    Json j;
    Json summary;
    if (auto* X = std::get_if<FlagComplex>(&g)) {
        j = complex_to_json(*X);
        summary = {{"type", "complex"}, {"vertices", X->size()}, {"edges", X->edge_count()}};
    } else {
        const auto& D = std::get<SimplicialDisc>(g);
        j = disc_to_json(D);
        summary = {{"type", "disc"},
                   {"vertices", D.vertex_count()},
                   {"triangles", D.triangle_count()},
                   {"boundary_length", D.boundary().length()}};
    }
    fixture = j.dump(2) + "\n";
    if (!a.out.empty())
        write_text_file(a.out, fixture);
    Report r;
    r.body = {{"command", "generate"},
              {"kind", to_string(a.spec.kind)},
              {"seed", a.spec.seed ? Json(*a.spec.seed) : Json(nullptr)},
              {"output", summary},
              {"exit_code", kOk},
              {"timings_ms", {{"total", total.ms()}}}};
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Checkers, surgeries and metrics for flag simplicial complexes and disc diagrams", "simploc"};
    app.require_subcommand(1);
    std::string report_path, format = "json";
    std::optional<std::uint64_t> seed;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--report", report_path, "Write the JSON report here instead of stdout");
        sub->add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));
    };

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check", "Run condition checks on a complex (or disc skeleton)");
    check_cmd->add_option("file", check.file, "Complex JSON file")->required();
    check_cmd->add_option("--k-large", check.k_large, "No induced j-cycles for 4 <= j < k");
    check_cmd->add_option("--locally-k-large", check.locally_k_large, "Every link is k-large");
    check_cmd->add_option("--m-located", check.m_located, "Short dwheels with full wheels are dominated");
    check_cmd->add_flag("--w5hat", check.w5hat, "Every extended 5-wheel lies in a link");
    check_cmd->add_flag("--lws", check.lws, "Locally weakly systolic: 5-large and the W5-hat condition");
    common(check_cmd);

    ReduceArgs red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Greedy area reduction of a disc diagram");
    reduce_cmd->add_option("file", red.file, "Diagram JSON file")->required();
    reduce_cmd->add_option("--target", red.target, "Target complex (overrides the embedded one)");
    reduce_cmd->add_option("--out", red.out, "Write the reduced diagram here");
    common(reduce_cmd);

    MinimizeArgs mini;
    auto* minimize_cmd = app.add_subcommand("minimize", "Brute-force all minimal disc diagrams of a loop");
    minimize_cmd->add_option("file", mini.file, "Target complex JSON file")->required();
    minimize_cmd->add_option("--loop", mini.loop, "Comma-separated vertex labels")->required();
    minimize_cmd->add_option("--cap", mini.cap, "Area cap")->capture_default_str();
    minimize_cmd->add_option("--max-diagrams", mini.max_diagrams, "Maximum diagrams returned")
        ->capture_default_str();
    common(minimize_cmd);

    MetrizeArgs met;
    auto* metrize_cmd = app.add_subcommand("metrize", "Flattened wheel metric and CAT(0) angle check");
    metrize_cmd->add_option("file", met.file, "Disc JSON file")->required();
    metrize_cmd->add_option("--svg", met.svg, "Write an SVG drawing here");
    common(metrize_cmd);

    int n = 0;
    auto* bound_cmd = app.add_subcommand("bound", "Isoperimetric triangle bound n^2/pi");
    bound_cmd->add_option("n", n, "Boundary length")->required();
    common(bound_cmd);

    GenerateArgs gen;
    auto* generate_cmd = app.add_subcommand("generate", "Write a fixture complex or disc as JSON");
    generate_cmd->add_option("kind", gen.kind,
                             "wheel, dwheel, extended-5wheel, cone, hex-disc, random-disc, random-flag")
        ->required();
    generate_cmd->add_option("--k", gen.spec.k, "Wheel size / first dwheel wheel")->capture_default_str();
    generate_cmd->add_option("--l", gen.spec.l, "Second dwheel wheel")->capture_default_str();
    generate_cmd->add_flag("--nonplanar", gen.nonplanar, "Nonplanar dwheel");
    generate_cmd->add_option("--radius", gen.spec.radius, "Hex disc radius")->capture_default_str();
    generate_cmd->add_option("--size", gen.spec.size, "Moves (random disc) or vertices (random flag)")
        ->capture_default_str();
    generate_cmd->add_option("--p", gen.spec.p, "Edge probability (random flag)")->capture_default_str();
    generate_cmd->add_flag("--flag-only", gen.flag_only, "Random disc: do not require 7-location");
    generate_cmd->add_option("--base", gen.base, "Kind to cone over (cone)");
    generate_cmd->add_option("--out", gen.out, "Write the fixture here instead of stdout");
    generate_cmd->add_option("--seed", seed, "Seed for the random kinds");
    generate_cmd->add_option("--report", report_path, "Write a JSON run report here");
    generate_cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"json"}));

    std::vector<const char*> argv;
    for (const auto& s : args)
        argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    CLI::App* used = app.get_subcommands().front();
    Report r;
    std::string fixture;
    try {
        if (used == check_cmd)
            r = cmd_check(check);
        else if (used == reduce_cmd)
            r = cmd_reduce(red);
        else if (used == minimize_cmd)
            r = cmd_minimize(mini);
        else if (used == metrize_cmd)
            r = cmd_metrize(met);
        else if (used == bound_cmd)
            r = cmd_bound(n);
        else {
            gen.spec.seed = seed;
            r = cmd_generate(gen, fixture);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        r.body = {{"command", used->get_name()}, {"error", e.what()}, {"exit_code", kInputError}};
        r.exit_code = kInputError;
    } catch (const SurgeryError& e) {
        err << "error: " << e.what() << "\n";
        r.body = {{"command", used->get_name()}, {"error", e.what()}, {"exit_code", kInputError}};
        r.exit_code = kInputError;
    }

    const std::string text = r.body.dump(2) + "\n";
    try {
        // generate prints the fixture itself; its report only goes to --report.
        const bool fixture_run = used == generate_cmd && r.exit_code == kOk;
        if (fixture_run && gen.out.empty())
            out << fixture;
        if (!report_path.empty())
            write_text_file(report_path, text);
        else if (!fixture_run)
            out << text;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return r.exit_code;
}

} // namespace simploc::cli
