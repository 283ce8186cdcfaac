#include "amoeba/json_io.hpp"

#include "amoeba/error.hpp"

#include <sstream>

namespace amoeba::io {

namespace {

[[noreturn]] void malformed(const std::string& why)
{
    throw Error(ErrorKind::MalformedInput, "malformed input: " + why);
}

const json& field(const json& j, const char* name)
{
    if (!j.is_object())
        malformed("expected a JSON object");
    auto it = j.find(name);
    if (it == j.end())
        malformed(std::string("missing field \"") + name + "\"");
    return *it;
}

int as_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        malformed(std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

json edges_to_json(const std::vector<Edge>& edges)
{
    json out = json::array();
    for (const Edge& e : edges)
        out.push_back({e.u, e.v});
    return out;
}

json to_json(const Tree& t)
{
    return {{"vertices", t.size()}, {"edges", edges_to_json(t.edges())}};
}

json to_json(const Amoeba& a)
{
    json j = to_json(a.shape());
    j["mult"] = a.mult();
    return j;
}

json to_json(const Colony& c)
{
    json members = json::array();
    for (const Amoeba& a : c.members())
        members.push_back(to_json(a));
    return {{"members", members}};
}

json to_json(const CopyEmbedding& c)
{
    json mult = json::array();
    for (const RootMult& rm : c.mult)
        mult.push_back({rm.vertex, rm.mult});
    return {{"edges", edges_to_json(c.edges)}, {"mult", mult}, {"vertices", c.vertices()}};
}

json to_json(const DegreeReport& r)
{
    json arcs = json::array();
    for (auto [x, y] : r.d_edges)
        arcs.push_back({x, y});
    return {{"applicable", r.applicable},
            {"tilde_d", r.tilde_d},
            {"M", r.max_tilde},
            {"D_edges", arcs},
            {"q", r.q},
            {"max_degree", r.max_degree},
            {"k", r.total_mult},
            {"verdicts",
             {{"q_equals_M", r.q_equals_m},
              {"degrees_bounded", r.degrees_bounded},
              {"delta_le_1_plus_k", r.delta_le_1_plus_k}}},
            {"mortal_by_degree", r.mortal_by_degree()}};
}

json to_json(const CaterpillarSpec& s)
{
    return {{"legs", s.legs}, {"roots", s.roots}, {"text", format_spec(s)}};
}

json to_json(const SlowVerdict& v)
{
    auto pairs = [](const std::vector<std::pair<Orientation, int>>& list) {
        json out = json::array();
        for (auto [o, pos] : list)
            out.push_back({{"orientation", to_string(o)}, {"position", pos}});
        return out;
    };
    return {{"decreasing_ok", v.decreasing_ok},
            {"increasing_ok", v.increasing_ok},
            {"mandated_missing", pairs(v.mandated_missing)},
            {"sequence_violations", pairs(v.sequence_violations)}};
}

json to_json(const CaterpillarResult& r)
{
    json j = {{"decision", to_string(r.decision)}, {"reason", r.reason}};
    if (r.spec)
        j["spec"] = to_json(*r.spec);
    if (r.completed)
        j["completed"] = to_json(*r.completed);
    if (r.verdict)
        j["slow"] = to_json(*r.verdict);
    return j;
}

json to_json(const Classification& c)
{
    struct Body {
        json operator()(const certificate::ConfiningTreeReached& x) const
        {
            return {{"tree", to_json(x.tree)}, {"steps", x.log.steps.size()}};
        }
        json operator()(const certificate::ConfiningTreeFound& x) const { return {{"tree", to_json(x.tree)}}; }
        json operator()(const certificate::MortalByDegree& x) const { return {{"report", to_json(x.report)}}; }
        json operator()(const certificate::ExhaustedStateSpace& x) const { return {{"states", x.states}}; }
        json operator()(const certificate::SlowCaterpillar& x) const { return {{"spec", to_json(x.spec)}}; }
        json operator()(const certificate::SurvivedBudget& x) const
        {
            return {{"steps", x.steps}, {"final_size", x.final_size}};
        }
    };
    json cert = std::visit(Body{}, c.certificate);
    cert["kind"] = certificate_kind(c.certificate);
    return {{"verdict", to_string(c.verdict)}, {"certificate", cert}};
}

json to_json(const Violation& v)
{
    return {{"step", v.step}, {"kind", v.kind}, {"detail", v.detail}};
}

json to_json(const VertexPartition& p)
{
    return p.blocks;
}

std::vector<Edge> edges_from_json(const json& j)
{
    if (!j.is_array())
        malformed("edges must be an array");
    std::vector<Edge> edges;
    for (const json& e : j) {
        if (!e.is_array() || e.size() != 2)
            malformed("each edge must be a pair [u, v]");
        edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    return edges;
}

Tree tree_from_json(const json& j)
{
    const json& n = field(j, "vertices");
    if (!n.is_number_integer() || n.get<long long>() < 0)
        malformed("\"vertices\" must be a non-negative integer");
    // Edges of a grown tree may be listed in growth order, not sorted.
    return Tree(n.get<std::size_t>(), edges_from_json(field(j, "edges")));
}

Amoeba amoeba_from_json(const json& j)
{
    Tree t = tree_from_json(j);
    const json& m = field(j, "mult");
    if (!m.is_array())
        malformed("\"mult\" must be an array");
    std::vector<int> mult;
    for (const json& x : m)
        mult.push_back(as_int(x, "multiplicity"));
    return Amoeba(std::move(t), std::move(mult));
}

Colony colony_from_json(const json& j)
{
    const json& members = field(j, "members");
    if (!members.is_array())
        malformed("\"members\" must be an array");
    std::vector<Amoeba> list;
    for (const json& m : members)
        list.push_back(amoeba_from_json(m));
    return Colony(std::move(list));
}

CopyEmbedding copy_from_json(const json& edges, const json& mult)
{
    CopyEmbedding c;
    c.edges = edges_from_json(edges);
    std::sort(c.edges.begin(), c.edges.end());
    if (!mult.is_array())
        malformed("copy multiplicities must be an array");
    for (const json& pair : mult) {
        if (!pair.is_array() || pair.size() != 2)
            malformed("copy multiplicity entries must be [vertex, mult]");
        c.mult.push_back({as_int(pair[0], "vertex"), as_int(pair[1], "multiplicity")});
    }
    std::sort(c.mult.begin(), c.mult.end());
    return c;
}

json parse_document(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(e.what());
    }
}

Tree parse_tree(const std::string& text)
{
    return tree_from_json(parse_document(text));
}

Document parse_any(const std::string& text)
{
    json j = parse_document(text);
    if (!j.is_object())
        malformed("expected a JSON object");
    if (j.contains("members"))
        return colony_from_json(j);
    if (j.contains("mult"))
        return amoeba_from_json(j);
    return tree_from_json(j);
}

std::string log_to_jsonl(const SequenceLog& log)
{
    json header;
    if (log.colony)
        header["colony"] = to_json(Colony(log.members));
    else
        header["amoeba"] = to_json(log.amoeba());
    header["ell"] = log.ell;
    header["start"] = to_json(log.start);

    std::string out = header.dump() + "\n";
    for (const LogStep& s : log.steps) {
        json mult = json::array();
        for (const RootMult& rm : s.copy.mult)
            mult.push_back({rm.vertex, rm.mult});
        json line = {{"copy_edges", edges_to_json(s.copy.edges)},
                     {"copy_mult", mult},
                     {"new_edges", edges_to_json(s.new_edges)}};
        if (log.colony)
            line["member"] = s.member;
        out += line.dump() + "\n";
    }
    return out;
}

SequenceLog log_from_jsonl(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    SequenceLog log;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json j = parse_document(line);
        if (!have_header) {
            if (j.contains("colony")) {
                log.colony = true;
                log.members = colony_from_json(j["colony"]).members();
            } else {
                log.members = {amoeba_from_json(field(j, "amoeba"))};
            }
            log.ell = as_int(field(j, "ell"), "ell");
            log.start = tree_from_json(field(j, "start"));
            have_header = true;
            continue;
        }
        LogStep step;
        step.copy = copy_from_json(field(j, "copy_edges"), field(j, "copy_mult"));
        step.new_edges = edges_from_json(field(j, "new_edges"));
        if (j.contains("member"))
            step.member = as_int(j["member"], "member");
        log.steps.push_back(std::move(step));
    }
    if (!have_header)
        malformed("log has no header line");
    return log;
}

} // namespace amoeba::io
