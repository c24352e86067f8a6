#include "simploc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "simploc/error.hpp"

namespace simploc {

Json parse_json(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::string detail = e.what();
        if (auto pos = detail.find("parse error"); pos != std::string::npos)
            detail = detail.substr(pos);
        throw InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + detail);
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

Json label_json(const std::string& label)
{
    long long value = 0;
    auto [end, ec] = std::from_chars(label.data(), label.data() + label.size(), value);
    if (ec == std::errc{} && end == label.data() + label.size() && std::to_string(value) == label)
        return value;
    return label;
}

namespace {

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(where + ": missing \"" + key + "\"");
    return *it;
}

const Json& array_field(const Json& j, const char* key, const std::string& where)
{
    const Json& a = field(j, key, where);
    if (!a.is_array())
        throw InputError(where + "." + key + ": expected an array");
    return a;
}

std::string label_of(const Json& x, const std::string& where)
{
    if (x.is_number_integer())
        return std::to_string(x.get<long long>());
    if (x.is_string())
        return x.get<std::string>();
    throw InputError(where + ": expected an integer or string vertex");
}

VertexId lookup(const FlagComplex& X, const Json& x, const std::string& where)
{
    const std::string label = label_of(x, where);
    if (auto id = X.find(label))
        return *id;
    throw InputError(where + ": unknown vertex \"" + label + "\"");
}

VertexId int_id(const Json& x, const std::string& where)
{
    if (!x.is_number_integer())
        throw InputError(where + ": expected an integer vertex id");
    const auto value = x.get<long long>();
    if (value < 0 || value > 1'000'000'000)
        throw InputError(where + ": vertex id out of range");
    return static_cast<VertexId>(value);
}

void maximal_cliques(const FlagComplex& X, std::vector<VertexId>& R, std::vector<VertexId> P,
                     std::vector<VertexId> Xs, std::vector<std::vector<VertexId>>& out)
{
    if (P.empty() && Xs.empty()) {
        out.push_back(R);
        return;
    }
    while (!P.empty()) {
        const VertexId v = P.back();
        P.pop_back();
        std::vector<VertexId> P2, X2;
        for (VertexId u : P)
            if (X.adjacent(u, v))
                P2.push_back(u);
        for (VertexId u : Xs)
            if (X.adjacent(u, v))
                X2.push_back(u);
        R.push_back(v);
        maximal_cliques(X, R, std::move(P2), std::move(X2), out);
        R.pop_back();
        Xs.push_back(v);
    }
}

void check_simplices(const FlagComplex& X, const Json& simplices)
{
    if (!simplices.is_array())
        throw InputError("simplices: expected an array");
    std::vector<std::vector<VertexId>> listed;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const std::string where = "simplices[" + std::to_string(i) + "]";
        if (!simplices[i].is_array() || simplices[i].empty())
            throw InputError(where + ": expected a non-empty array");
        std::vector<VertexId> s;
        for (std::size_t k = 0; k < simplices[i].size(); ++k)
            s.push_back(lookup(X, simplices[i][k], where + "[" + std::to_string(k) + "]"));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError(where + ": repeated vertex");
        if (!X.is_clique(s))
            throw InputError(where + ": not a clique of the edge graph, so the complex is not flag");
        listed.push_back(std::move(s));
    }
    std::vector<VertexId> R, all(X.size());
    for (VertexId v = 0; v < X.size(); ++v)
        all[v] = v;
    std::vector<std::vector<VertexId>> cliques;
    maximal_cliques(X, R, all, {}, cliques);
    for (auto& c : cliques) {
        if (c.size() < 3)
            continue;
        std::sort(c.begin(), c.end());
        const bool covered = std::any_of(listed.begin(), listed.end(), [&](const auto& s) {
            return std::includes(s.begin(), s.end(), c.begin(), c.end());
        });
        if (!covered) {
            std::string names;
            for (VertexId v : c)
                names += (names.empty() ? "" : ", ") + X.label(v);
            throw InputError("simplices: clique {" + names + "} is missing, so the complex is not flag");
        }
    }
}

} // namespace

FlagComplex complex_from_json(const Json& j)
{
    const Json& vs = array_field(j, "vertices", "complex");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < vs.size(); ++i)
        labels.push_back(label_of(vs[i], "vertices[" + std::to_string(i) + "]"));
    std::vector<std::pair<std::string, std::string>> edges;
    if (j.contains("edges")) {
        const Json& es = array_field(j, "edges", "complex");
        std::set<std::string> known(labels.begin(), labels.end());
        for (std::size_t i = 0; i < es.size(); ++i) {
            const std::string where = "edges[" + std::to_string(i) + "]";
            if (!es[i].is_array() || es[i].size() != 2)
                throw InputError(where + ": expected a pair");
            auto a = label_of(es[i][0], where), b = label_of(es[i][1], where);
            for (const auto& x : {a, b})
                if (!known.contains(x))
                    throw InputError(where + ": unknown vertex \"" + x + "\"");
            edges.emplace_back(std::move(a), std::move(b));
        }
    }
    FlagComplex X;
    try {
        X = FlagComplex::from_labeled_edges(std::move(labels), edges);
    } catch (const InputError& e) {
        throw InputError(std::string("complex: ") + e.what());
    }
    if (j.contains("simplices"))
        check_simplices(X, j["simplices"]);
    return X;
}

Json complex_to_json(const FlagComplex& X)
{
    Json vs = Json::array(), es = Json::array();
    for (VertexId v = 0; v < X.size(); ++v)
        vs.push_back(label_json(X.label(v)));
    for (auto [a, b] : X.edges())
        es.push_back({label_json(X.label(a)), label_json(X.label(b))});
    return Json{{"vertices", std::move(vs)}, {"edges", std::move(es)}};
}

SimplicialDisc disc_from_json(const Json& j, DiscValidation options)
{
    const Json& ts = array_field(j, "triangles", "disc");
    const Json& bs = array_field(j, "boundary", "disc");
    std::vector<Triangle> tris;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        const std::string where = "triangles[" + std::to_string(i) + "]";
        if (!ts[i].is_array() || ts[i].size() != 3)
            throw InputError(where + ": expected three vertex ids");
        tris.push_back({int_id(ts[i][0], where), int_id(ts[i][1], where), int_id(ts[i][2], where)});
    }
    std::vector<VertexId> boundary;
    for (std::size_t i = 0; i < bs.size(); ++i)
        boundary.push_back(int_id(bs[i], "boundary[" + std::to_string(i) + "]"));
    return SimplicialDisc::build(std::move(tris), std::move(boundary), options);
}

Json disc_to_json(const SimplicialDisc& D)
{
    Json ts = Json::array();
    for (const auto& t : D.triangles())
        ts.push_back({t[0], t[1], t[2]});
    return Json{{"triangles", std::move(ts)}, {"boundary", D.boundary().vertices}};
}

DiscDiagram diagram_from_json(const Json& j, std::shared_ptr<const FlagComplex> target)
{
    SimplicialDisc D = disc_from_json(j);
    if (!target) {
        if (!j.contains("target"))
            throw InputError("diagram: missing \"target\" complex (or pass one explicitly)");
        target = std::make_shared<const FlagComplex>(complex_from_json(j["target"]));
    }
    const Json& m = field(j, "map", "diagram");
    std::vector<VertexId> map(D.vertex_count(), -1);
    if (m.is_array()) {
        if (static_cast<int>(m.size()) != D.vertex_count())
            throw InputError("diagram.map: has " + std::to_string(m.size()) + " entries for " +
                             std::to_string(D.vertex_count()) + " disc vertices");
        for (std::size_t i = 0; i < m.size(); ++i)
            map[i] = lookup(*target, m[i], "map[" + std::to_string(i) + "]");
    } else if (m.is_object()) {
        for (const auto& [key, value] : m.items()) {
            int v = -1;
            auto [end, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
            if (ec != std::errc{} || end != key.data() + key.size() || v < 0 || v >= D.vertex_count())
                throw InputError("diagram.map: key \"" + key + "\" is not a disc vertex");
            map[v] = lookup(*target, value, "map[\"" + key + "\"]");
        }
        for (int v = 0; v < D.vertex_count(); ++v)
            if (map[v] < 0)
                throw InputError("diagram.map: disc vertex " + std::to_string(v) + " is unmapped");
    } else {
        throw InputError("diagram.map: expected an array or object");
    }
    const Json& l = array_field(j, "loop", "diagram");
    Cycle loop;
    for (std::size_t i = 0; i < l.size(); ++i)
        loop.vertices.push_back(lookup(*target, l[i], "loop[" + std::to_string(i) + "]"));
    DiscDiagram d{std::move(D), std::move(target), std::move(map), std::move(loop)};
    validate_diagram(d);
    return d;
}

Json diagram_to_json(const DiscDiagram& d, bool embed_target)
{
    Json j = disc_to_json(d.disc);
    Json m = Json::array(), l = Json::array();
    for (VertexId x : d.vertex_map)
        m.push_back(label_json(d.target->label(x)));
    for (VertexId x : d.target_loop.vertices)
        l.push_back(label_json(d.target->label(x)));
    j["map"] = std::move(m);
    j["loop"] = std::move(l);
    if (embed_target)
        j["target"] = complex_to_json(*d.target);
    return j;
}

Json vertices_json(const FlagComplex& X, const std::vector<VertexId>& vs)
{
    Json out = Json::array();
    for (VertexId v : vs)
        out.push_back(label_json(X.label(v)));
    return out;
}

Json wheel_json(const FlagComplex& X, const WheelWitness& w)
{
    return Json{{"center", label_json(X.label(w.center))},
                {"boundary", vertices_json(X, w.boundary.vertices)},
                {"full", w.is_full}};
}

Json dwheel_json(const FlagComplex& X, const DwheelWitness& w)
{
    return Json{{"k", w.wheel1.size()},
                {"l", w.wheel2.size()},
                {"planar", w.planar},
                {"wheel1", wheel_json(X, w.wheel1)},
                {"wheel2", wheel_json(X, w.wheel2)},
                {"boundary", vertices_json(X, w.boundary.vertices)},
                {"vertices", vertices_json(X, w.vertices())}};
}

Json five_wheel_json(const FlagComplex& X, const ExtendedFiveWheelWitness& w)
{
    return Json{{"wheel", wheel_json(X, w.wheel)},
                {"edge", vertices_json(X, {w.edge_first, w.edge_second})},
                {"apex", label_json(X.label(w.apex))},
                {"vertices", vertices_json(X, w.vertices())}};
}

namespace {

template <class Report, class Describe>
Json location_report_json(const FlagComplex& X, const Report& r, Describe&& describe)
{
    Json witnesses = Json::array();
    int failing = 0;
    for (const auto& located : r.witnesses) {
        Json w = describe(X, located.witness);
        w["dominator"] = located.dominator ? label_json(X.label(*located.dominator)) : Json(nullptr);
        failing += located.dominator ? 0 : 1;
        witnesses.push_back(std::move(w));
    }
    return Json{{"verdict", r.verdict},
                {"checked", r.witnesses.size()},
                {"failing", failing},
                {"witnesses", std::move(witnesses)}};
}

} // namespace

Json dwheel_report_json(const FlagComplex& X, const DwheelReport& r)
{
    return location_report_json(X, r, dwheel_json);
}

Json five_wheel_report_json(const FlagComplex& X, const FiveWheelReport& r)
{
    return location_report_json(X, r, five_wheel_json);
}

Json certificate_json(const SurgeryCertificate& c)
{
    return Json{{"kind", to_string(c.kind)},
                {"locus", c.locus},
                {"area_before", c.area_before},
                {"area_after", c.area_after}};
}

Json metric_report_json(const MetrizedDisc& M)
{
    const auto& D = M.disc();
    Json shapes = Json::array();
    for (std::size_t t = 0; t < D.triangles().size(); ++t) {
        const auto& tri = D.triangles()[t];
        const auto& m = M.shapes()[t];
        shapes.push_back({{"triangle", {tri[0], tri[1], tri[2]}},
                          {"shape", "T" + std::to_string(m.shape.k)},
                          {"apex", m.apex >= 0 ? Json(m.apex) : Json(nullptr)},
                          {"area", m.shape.area()}});
    }
    Json sums = Json::array();
    for (VertexId v : D.interior_vertices()) {
        const ExactAngle a = angle_sum(M, v);
        sums.push_back({{"vertex", v}, {"units", a.units}, {"pi_multiple", a.pi_multiple()}});
    }
    Json wheels = Json::array();
    for (const auto& w : M.flattened_wheels())
        wheels.push_back({{"center", w.center}, {"boundary", w.boundary.vertices}});
    const Cat0Verdict verdict = is_cat0(M);
    const int n = D.boundary().length();
    const auto bound = isoperimetric_bound(n);
    const double area = metric_area(M);
    const double area_bound = static_cast<double>(n) * n / (4.0 * std::numbers::pi);
    return Json{{"angle_unit", "pi/60"},
                {"shapes", std::move(shapes)},
                {"flattened_wheels", std::move(wheels)},
                {"angle_sums", std::move(sums)},
                {"cat0", verdict.cat0},
                {"deficient", verdict.deficient},
                {"metric_area", area},
                {"isoperimetric",
                 {{"boundary_length", n},
                  {"triangles", D.triangle_count()},
                  {"triangle_bound", bound.triangles},
                  {"metric_area_bound", area_bound},
                  {"within_bound", D.triangle_count() <= bound.triangles && area <= area_bound + 1e-9}}}};
}

Json oracle_result_json(const OracleResult& r)
{
    Json diagrams = Json::array();
    for (const auto& d : r.diagrams)
        diagrams.push_back(diagram_to_json(d, false));
    return Json{{"status", to_string(r.status)},
                {"minimal_area", r.minimal_area >= 0 ? Json(r.minimal_area) : Json(nullptr)},
                {"explored", r.explored},
                {"truncated", r.truncated},
                {"diagram_count", r.diagrams.size()},
                {"diagrams", std::move(diagrams)}};
}

} // namespace simploc
