#include "hunt/strategy_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "hunt/errors.hpp"
#include "json.hpp"

namespace hunt {

using nlohmann::ordered_json;

namespace {

ordered_json to_array(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    for (Vertex v : s) a.push_back(v);
    return a;
}

VertexSet from_array(const ordered_json& a, const std::string& where) {
    if (!a.is_array()) throw InputError(where + " must be an array of vertex indices");
    VertexSet s;
    for (const auto& item : a) {
        if (!item.is_number_integer()) throw InputError(where + " holds a non-integer entry");
        auto v = item.get<long long>();
        if (v < 0 || v > std::numeric_limits<int>::max())
            throw InputError(where + " holds an out-of-range vertex index");
        if (s.contains(static_cast<Vertex>(v))) throw InputError(where + " repeats vertex " + std::to_string(v));
        s.insert(static_cast<Vertex>(v));
    }
    return s;
}

ordered_json certificate_object(const Certificate& c) {
    ordered_json j;
    j["k"] = c.k;
    j["explored_states"] = c.explored_states;
    j["frontier_peak"] = c.frontier_peak;
    j["component"] = c.component;
    return j;
}

}  // namespace

std::string strategy_to_json(const Strategy& s) {
    ordered_json j;
    j["hunters"] = s.hunters;
    j["respect"] = s.respect ? to_array(*s.respect) : ordered_json("all");
    ordered_json rounds = ordered_json::array();
    for (const auto& r : s.rounds) rounds.push_back(to_array(r));
    j["rounds"] = std::move(rounds);
    return j.dump() + "\n";
}

Strategy strategy_from_json(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(std::string("strategy file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("strategy file must hold an object");
    for (const char* key : {"hunters", "respect", "rounds"})
        if (!j.contains(key)) throw InputError(std::string("strategy file lacks \"") + key + "\"");

    Strategy s;
    if (!j["hunters"].is_number_integer() || j["hunters"].get<long long>() < 1 ||
        j["hunters"].get<long long>() > std::numeric_limits<int>::max())
        throw InputError("\"hunters\" must be a positive integer");
    s.hunters = j["hunters"].get<int>();

    const auto& respect = j["respect"];
    if (respect.is_string()) {
        if (respect.get<std::string>() != "all") throw InputError("\"respect\" must be \"all\" or an array");
    } else {
        s.respect = from_array(respect, "\"respect\"");
    }

    if (!j["rounds"].is_array()) throw InputError("\"rounds\" must be an array");
    std::size_t i = 0;
    for (const auto& r : j["rounds"]) s.rounds.push_back(from_array(r, "round " + std::to_string(++i)));
    return s;
}

Strategy load_strategy(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open strategy file " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return strategy_from_json(buffer.str());
}

void save_strategy(const std::string& path, const Strategy& s) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write strategy file " + path);
    out << strategy_to_json(s);
}

std::string certificate_to_json(const Certificate& c) { return certificate_object(c).dump() + "\n"; }

std::string certificates_to_json(const std::vector<Certificate>& cs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cs) a.push_back(certificate_object(c));
    return a.dump() + "\n";
}

}  // namespace hunt
