#include "amoeba/caterpillar.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace amoeba {

std::string_view to_string(Orientation o)
{
    return o == Orientation::Decreasing ? "decreasing" : "increasing";
}

std::string_view to_string(CaterpillarDecision d)
{
    switch (d) {
    case CaterpillarDecision::Immortal: return "Immortal";
    case CaterpillarDecision::Mortal: return "Mortal";
    case CaterpillarDecision::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

void validate_spec(const CaterpillarSpec& spec)
{
    if (spec.legs.empty())
        throw Error(ErrorKind::MalformedInput, "caterpillar needs a nonempty central path");
    if (spec.legs.front() != 0 || spec.legs.back() != 0)
        throw Error(ErrorKind::MalformedInput, "caterpillar needs d_1 = d_l = 0");
    for (int d : spec.legs)
        if (d < 0)
            throw Error(ErrorKind::MalformedInput, "negative leg count");
    if (!std::is_sorted(spec.roots.begin(), spec.roots.end()) ||
        std::adjacent_find(spec.roots.begin(), spec.roots.end()) != spec.roots.end())
        throw Error(ErrorKind::MalformedInput, "roots must be sorted and distinct");
    for (int r : spec.roots)
        if (r < 1 || r > spec.path_length())
            throw Error(ErrorKind::MalformedInput, "root position " + std::to_string(r) + " off the central path");
}

std::string format_spec(const CaterpillarSpec& spec)
{
    std::ostringstream os;
    os << "C(";
    for (std::size_t i = 0; i < spec.legs.size(); ++i)
        os << (i ? "," : "") << spec.legs[i];
    os << ") roots=";
    for (std::size_t i = 0; i < spec.roots.size(); ++i)
        os << (i ? "," : "") << spec.roots[i];
    return os.str();
}

CaterpillarSpec parse_spec(const std::string& text)
{
    static const std::regex pattern(R"(\s*C\(\s*([0-9,\s]*)\)\s*(?:roots\s*=\s*([0-9,\s]*))?\s*)");
    std::smatch match;
    if (!std::regex_match(text, match, pattern))
        throw Error(ErrorKind::MalformedInput, "cannot parse caterpillar spec '" + text + "'");
    auto numbers = [](const std::string& list) {
        std::vector<int> out;
        std::stringstream ss(list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto first = item.find_first_not_of(" \t");
            if (first == std::string::npos)
                continue;
            out.push_back(std::stoi(item.substr(first)));
        }
        return out;
    };
    CaterpillarSpec spec{numbers(match[1].str()), match[2].matched ? numbers(match[2].str()) : std::vector<int>{}};
    std::sort(spec.roots.begin(), spec.roots.end());
    validate_spec(spec);
    return spec;
}

Tree caterpillar_tree(const CaterpillarSpec& spec)
{
    validate_spec(spec);
    std::vector<Edge> edges;
    const int l = spec.path_length();
    for (int i = 1; i < l; ++i)
        edges.emplace_back(i - 1, i);
    Vertex next = l;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < spec.legs[static_cast<std::size_t>(i)]; ++j)
            edges.emplace_back(i, next++);
    return Tree(static_cast<std::size_t>(next), std::move(edges));
}

Amoeba caterpillar_amoeba(const CaterpillarSpec& spec)
{
    Tree t = caterpillar_tree(spec);
    std::vector<int> mult(t.size(), 0);
    for (int r : spec.roots)
        mult[static_cast<std::size_t>(r - 1)] = 1;
    return Amoeba(std::move(t), std::move(mult));
}

namespace {

std::vector<int> legs_along(const Tree& t, const std::vector<Vertex>& path)
{
    std::vector<int> legs;
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i == 0 || i + 1 == path.size())
            legs.push_back(0);
        else
            legs.push_back(static_cast<int>(t.degree(path[i])) - 2);
    }
    return legs;
}

// A longest path of a caterpillar passing through every vertex in `roots`,
// if one exists. Every longest path of a caterpillar contains the whole
// spine (the non-leaf vertices); only the end leaves can vary.
std::optional<std::vector<Vertex>> longest_path_through(const Tree& t, const std::vector<Vertex>& roots)
{
    if (t.size() <= 2) {
        std::vector<Vertex> path;
        for (std::size_t v = 0; v < t.size(); ++v)
            path.push_back(static_cast<Vertex>(v));
        return path;
    }
    std::vector<Vertex> spine;
    for (std::size_t v = 0; v < t.size(); ++v)
        if (t.degree(static_cast<Vertex>(v)) >= 2)
            spine.push_back(static_cast<Vertex>(v));
    auto on_spine = [&](Vertex v) { return t.degree(v) >= 2; };
    // Order the spine as a path starting from an end.
    Vertex start = spine.front();
    for (Vertex v : spine) {
        int inner = 0;
        for (Vertex w : t.neighbors(v))
            inner += on_spine(w) ? 1 : 0;
        if (inner > 2)
            return std::nullopt;
        if (inner <= 1) {
            start = v;
            break;
        }
    }
    std::vector<Vertex> ordered{start};
    Vertex prev = -1;
    Vertex cur = start;
    while (true) {
        Vertex step = -1;
        for (Vertex w : t.neighbors(cur))
            if (w != prev && on_spine(w))
                step = w;
        if (step < 0)
            break;
        prev = cur;
        cur = step;
        ordered.push_back(cur);
    }
    if (ordered.size() != spine.size())
        return std::nullopt;

    auto is_root = [&](Vertex v) { return std::find(roots.begin(), roots.end(), v) != roots.end(); };
    auto leaves_at = [&](Vertex s) {
        std::vector<Vertex> rooted;
        std::vector<Vertex> plain;
        for (Vertex w : t.neighbors(s))
            if (!on_spine(w))
                (is_root(w) ? rooted : plain).push_back(w);
        return std::pair{rooted, plain};
    };
    for (Vertex r : roots) {
        if (on_spine(r))
            continue;
        Vertex s = t.neighbors(r).front();
        if (s != ordered.front() && s != ordered.back())
            return std::nullopt;
    }

    Vertex first = -1;
    Vertex last = -1;
    if (ordered.size() == 1) {
        auto [rooted, plain] = leaves_at(ordered.front());
        if (rooted.size() > 2)
            return std::nullopt;
        rooted.insert(rooted.end(), plain.begin(), plain.end());
        first = rooted[0];
        last = rooted[1];
    } else {
        auto [lr, lp] = leaves_at(ordered.front());
        auto [rr, rp] = leaves_at(ordered.back());
        if (lr.size() > 1 || rr.size() > 1)
            return std::nullopt;
        first = lr.empty() ? lp.front() : lr.front();
        last = rr.empty() ? rp.front() : rr.front();
    }
    std::vector<Vertex> path{first};
    path.insert(path.end(), ordered.begin(), ordered.end());
    path.push_back(last);
    return path;
}

} // namespace

std::optional<CaterpillarSpec> recognize_caterpillar(const Tree& t)
{
    std::vector<Vertex> path = diametral_path(t);
    std::vector<bool> near(t.size(), false);
    for (Vertex p : path) {
        near[static_cast<std::size_t>(p)] = true;
        for (Vertex w : t.neighbors(p))
            near[static_cast<std::size_t>(w)] = true;
    }
    if (std::find(near.begin(), near.end(), false) != near.end())
        return std::nullopt;
    std::vector<int> legs = legs_along(t, path);
    std::vector<int> reversed(legs.rbegin(), legs.rend());
    return CaterpillarSpec{std::min(legs, reversed), {}};
}

std::optional<CaterpillarSpec> caterpillar_spec_of(const Amoeba& a)
{
    for (int m : a.mult())
        if (m > 1)
            return std::nullopt;
    if (!recognize_caterpillar(a.shape()))
        return std::nullopt;
    std::vector<Vertex> roots = a.roots();
    auto path = longest_path_through(a.shape(), roots);
    if (!path)
        return std::nullopt;

    CaterpillarSpec forward{legs_along(a.shape(), *path), {}};
    for (std::size_t i = 0; i < path->size(); ++i)
        if (a.mult((*path)[i]) > 0)
            forward.roots.push_back(static_cast<int>(i) + 1);
    if (forward.roots.size() != roots.size())
        return std::nullopt;

    CaterpillarSpec backward{{forward.legs.rbegin(), forward.legs.rend()}, {}};
    const int l = forward.path_length();
    for (auto it = forward.roots.rbegin(); it != forward.roots.rend(); ++it)
        backward.roots.push_back(l + 1 - *it);
    if (std::tie(backward.legs, backward.roots) < std::tie(forward.legs, forward.roots))
        return backward;
    return forward;
}

bool is_slow_sequence(std::span<const int> seq, Orientation orientation)
{
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const int diff = seq[i] - seq[i - 1];
        if (orientation == Orientation::Decreasing ? diff < -1 : diff > 1)
            return false;
    }
    return true;
}

SlowVerdict is_slow_amoeba(const CaterpillarSpec& spec)
{
    validate_spec(spec);
    SlowVerdict v;
    const auto& d = spec.legs;
    const int l = spec.path_length();
    auto has_root = [&](int pos) { return std::binary_search(spec.roots.begin(), spec.roots.end(), pos); };

    for (Orientation o : {Orientation::Decreasing, Orientation::Increasing}) {
        bool ok = true;
        std::vector<int> mandated;
        for (int i = 2; i <= l; ++i) {
            const int diff = d[static_cast<std::size_t>(i - 1)] - d[static_cast<std::size_t>(i - 2)];
            if (o == Orientation::Decreasing) {
                if (diff < -1) {
                    v.sequence_violations.emplace_back(o, i);
                    ok = false;
                } else if (diff == -1) {
                    mandated.push_back(i);
                }
            } else {
                if (diff > 1) {
                    v.sequence_violations.emplace_back(o, i);
                    ok = false;
                } else if (diff == 1) {
                    mandated.push_back(i - 1);
                }
            }
        }
        mandated.push_back(o == Orientation::Decreasing ? l : 1);
        std::sort(mandated.begin(), mandated.end());
        mandated.erase(std::unique(mandated.begin(), mandated.end()), mandated.end());
        for (int pos : mandated) {
            if (!has_root(pos)) {
                v.mandated_missing.emplace_back(o, pos);
                ok = false;
            }
        }
        (o == Orientation::Decreasing ? v.decreasing_ok : v.increasing_ok) = ok;
    }
    return v;
}

CaterpillarResult decide_caterpillar(const Amoeba& a)
{
    CaterpillarResult r;
    if (a.shape().size() < 2) {
        r.reason = "a single vertex has no central path with distinct ends";
        return r;
    }
    r.spec = caterpillar_spec_of(a);
    if (!r.spec) {
        r.reason = "not a caterpillar with 0/1 multiplicities and all roots on a longest path";
        return r;
    }
    Amoeba full = completion(a);
    r.completed = caterpillar_spec_of(full);
    if (!r.completed) {
        r.decision = CaterpillarDecision::Mortal;
        r.reason = "completion puts a root off every longest path";
        return r;
    }
    r.verdict = is_slow_amoeba(*r.completed);
    if (r.verdict->slow()) {
        r.decision = CaterpillarDecision::Immortal;
        r.reason = r.verdict->decreasing_ok ? "completion is slowly decreasing" : "completion is slowly increasing";
    } else {
        r.decision = CaterpillarDecision::Mortal;
        r.reason = "completion is not slow";
    }
    return r;
}

CaterpillarSpec shift_step(const CaterpillarSpec& spec)
{
    validate_spec(spec);
    const int l = spec.path_length();
    auto has_root = [&](int pos) { return std::binary_search(spec.roots.begin(), spec.roots.end(), pos); };

    if (l == 1) {
        if (spec.roots.empty())
            return spec;
        return {{0, 0}, {2}};
    }

    const bool grow_left = has_root(1);
    const bool grow_right = has_root(l);
    CaterpillarSpec out;
    if (grow_left)
        out.legs.push_back(0);
    for (int i = 1; i <= l; ++i) {
        int leg = spec.legs[static_cast<std::size_t>(i - 1)];
        if (i != 1 && i != l && has_root(i))
            ++leg;
        out.legs.push_back(leg); // old ends become interior with leg 0 when they grew
    }
    if (grow_right)
        out.legs.push_back(0);

    const int offset = grow_left ? 1 : 0;
    const int shift = grow_right ? 1 : (grow_left ? -1 : 0);
    const int new_l = out.path_length();
    for (int r : spec.roots) {
        int pos = r + offset + shift;
        if (pos >= 1 && pos <= new_l)
            out.roots.push_back(pos);
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

} // namespace amoeba
