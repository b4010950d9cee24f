#include "hopwheel/scenario.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

namespace hopwheel {

using nlohmann::json;

namespace {

void reject_unknown_keys(const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) { known = true; break; }
        if (!known)
            throw ConfigError(path.empty() ? item.key() : path + "." + item.key(),
                              "unknown key");
    }
}

const json* find(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double get_number(const json& obj, const char* key, const std::string& path,
                  double fallback) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_number())
        throw ConfigError(path + "." + key, "expected a number");
    return v->get<double>();
}

bool get_bool(const json& obj, const char* key, const std::string& path,
              bool fallback) {
    const json* v = find(obj, key);
    if (!v) return fallback;
    if (!v->is_boolean())
        throw ConfigError(path + "." + key, "expected a boolean");
    return v->get<bool>();
}

const json& require_object(const json& v, const std::string& path) {
    if (!v.is_object()) throw ConfigError(path, "expected an object");
    return v;
}

ReferenceProfile parse_profile_segments(const json& arr, const std::string& path) {
    if (!arr.is_array() || arr.empty())
        throw ConfigError(path, "expected a non-empty array of segments");
    std::vector<ProfileSegment> segments;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string spath = path + "." + std::to_string(i);
        const json& sj = require_object(arr[i], spath);
        reject_unknown_keys(sj, spath, {"t_start", "t_end", "kind", "value"});
        ProfileSegment seg;
        if (!find(sj, "t_start")) throw ConfigError(spath + ".t_start", "required");
        seg.t_start = get_number(sj, "t_start", spath, 0.0);
        if (const json* te = find(sj, "t_end"); te && !te->is_null()) {
            if (!te->is_number()) throw ConfigError(spath + ".t_end", "expected a number or null");
            seg.t_end = te->get<double>();
        }
        const json* kind = find(sj, "kind");
        if (!kind || !kind->is_string())
            throw ConfigError(spath + ".kind", "expected \"ramp\" or \"constant\"");
        const std::string k = kind->get<std::string>();
        if (k == "ramp") seg.kind = SegmentKind::Ramp;
        else if (k == "constant") seg.kind = SegmentKind::Constant;
        else throw ConfigError(spath + ".kind", "expected \"ramp\" or \"constant\"");
        if (!find(sj, "value")) throw ConfigError(spath + ".value", "required");
        seg.value = get_number(sj, "value", spath, 0.0);
        segments.push_back(seg);
    }
    try {
        return ReferenceProfile(std::move(segments));
    } catch (const std::invalid_argument& e) {
        throw ConfigError(path, e.what());
    }
}

json segment_to_json(const ProfileSegment& seg) {
    json sj;
    sj["t_start"] = seg.t_start;
    sj["t_end"] = std::isinf(seg.t_end) ? json(nullptr) : json(seg.t_end);
    sj["kind"] = seg.kind == SegmentKind::Ramp ? "ramp" : "constant";
    sj["value"] = seg.value;
    return sj;
}

}  // namespace

json profile_to_json(const ReferenceProfile& profile) {
    json segments = json::array();
    for (const ProfileSegment& seg : profile.segments())
        segments.push_back(segment_to_json(seg));
    return json{{"segments", segments}};
}

json builtin_scenario_json(const std::string& name) {
    if (name == "vertical")
        return json{{"profile", "vertical"}, {"sim", {{"t_end", 8.0}}}};
    if (name == "horizontal")
        return json{{"profile", "horizontal"}, {"sim", {{"t_end", 6.0}}}};
    throw ConfigError("scenario", "unknown scenario \"" + name +
                                      "\" (expected \"vertical\" or \"horizontal\")");
}

json load_scenario_json(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("", "cannot open config file " + path);
    json doc = json::parse(is, nullptr, false);
    if (doc.is_discarded()) throw ConfigError("", "invalid JSON in " + path);
    return doc;
}

void apply_override(nlohmann::json& doc, const std::string& assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0)
        throw ConfigError("", "override must have the form key.path=value: " + assignment);
    const std::string path = assignment.substr(0, eq);
    const std::string raw = assignment.substr(eq + 1);

    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= path.size()) {
        const auto dot = path.find('.', start);
        tokens.push_back(path.substr(start, dot == std::string::npos ? dot : dot - start));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    for (const std::string& tok : tokens)
        if (tok.empty()) throw ConfigError(path, "empty path component");

    // Overriding inside the profile needs the segment list; expand a named
    // builtin in place first.
    if (tokens.size() > 1 && tokens.front() == "profile" && doc.contains("profile") &&
        doc["profile"].is_string()) {
        const std::string name = doc["profile"].get<std::string>();
        const auto& profiles = builtin_profiles();
        const auto it = profiles.find(name);
        if (it == profiles.end()) throw ConfigError("profile", "unknown profile \"" + name + "\"");
        doc["profile"] = profile_to_json(it->second);
    }

    json value = json::parse(raw, nullptr, false);
    if (value.is_discarded()) value = raw;  // plain string

    json* node = &doc;
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (node->is_array()) {
            std::size_t idx = 0;
            try {
                idx = std::stoul(tok);
            } catch (...) {
                throw ConfigError(path, "expected an array index at \"" + tok + "\"");
            }
            if (idx >= node->size())
                throw ConfigError(path, "array index " + tok + " out of range");
            node = &(*node)[idx];
        } else {
            if (!node->is_object() && !node->is_null())
                throw ConfigError(path, "cannot descend into \"" + tok + "\"");
            node = &(*node)[tok];
        }
    }
    const std::string& leaf = tokens.back();
    if (node->is_array()) {
        std::size_t idx = 0;
        try {
            idx = std::stoul(leaf);
        } catch (...) {
            throw ConfigError(path, "expected an array index at \"" + leaf + "\"");
        }
        if (idx >= node->size())
            throw ConfigError(path, "array index " + leaf + " out of range");
        (*node)[idx] = value;
    } else {
        if (!node->is_object() && !node->is_null())
            throw ConfigError(path, "cannot assign into \"" + leaf + "\"");
        (*node)[leaf] = value;
    }
}

Scenario parse_scenario(const json& doc) {
    require_object(doc, "config");
    reject_unknown_keys(doc, "", {"robot", "controller", "profile", "sim", "output"});

    Scenario sc;

    if (const json* rj = find(doc, "robot")) {
        const json& r = require_object(*rj, "robot");
        reject_unknown_keys(r, "robot",
                            {"m_o", "m_p", "R", "l_p", "I_o", "g", "tau_max", "mu", "kv"});
        RobotParams d;  // documented defaults
        sc.robot.m_o = get_number(r, "m_o", "robot", d.m_o);
        sc.robot.m_p = get_number(r, "m_p", "robot", d.m_p);
        sc.robot.R = get_number(r, "R", "robot", d.R);
        sc.robot.l_p = get_number(r, "l_p", "robot", d.l_p);
        sc.robot.g = get_number(r, "g", "robot", d.g);
        sc.robot.tau_max = get_number(r, "tau_max", "robot", d.tau_max);
        sc.robot.mu = get_number(r, "mu", "robot", d.mu);
        sc.robot.kv = get_number(r, "kv", "robot", d.kv);
        sc.robot.I_o = get_number(r, "I_o", "robot", 0.0);
        if (!find(r, "I_o")) sc.robot.I_o = sc.robot.thin_hoop_inertia();
    } else {
        sc.robot.I_o = sc.robot.thin_hoop_inertia();
    }
    try {
        sc.robot.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("robot", e.what());
    }

    sc.controller.tau_max = sc.robot.tau_max;
    if (const json* cj = find(doc, "controller")) {
        const json& c = require_object(*cj, "controller");
        reject_unknown_keys(c, "controller", {"kp", "tau_max", "saturation_enabled"});
        sc.controller.kp = get_number(c, "kp", "controller", sc.controller.kp);
        sc.controller.tau_max = get_number(c, "tau_max", "controller", sc.controller.tau_max);
        sc.controller.saturation_enabled =
            get_bool(c, "saturation_enabled", "controller", sc.controller.saturation_enabled);
    }
    if (!(sc.controller.kp > 0.0) || !std::isfinite(sc.controller.kp))
        throw ConfigError("controller.kp", "must be a positive finite number");
    if (!(sc.controller.tau_max > 0.0) || !std::isfinite(sc.controller.tau_max))
        throw ConfigError("controller.tau_max", "must be a positive finite number");

    if (const json* pj = find(doc, "profile")) {
        if (pj->is_string()) {
            const std::string name = pj->get<std::string>();
            const auto& profiles = builtin_profiles();
            const auto it = profiles.find(name);
            if (it == profiles.end())
                throw ConfigError("profile", "unknown profile \"" + name + "\"");
            sc.profile = it->second;
            sc.profile_name = name;
        } else {
            const json& p = require_object(*pj, "profile");
            reject_unknown_keys(p, "profile", {"segments"});
            const json* segs = find(p, "segments");
            if (!segs) throw ConfigError("profile.segments", "required");
            sc.profile = parse_profile_segments(*segs, "profile.segments");
        }
    } else {
        sc.profile = builtin_profiles().at("vertical");
        sc.profile_name = "vertical";
    }

    if (const json* sj = find(doc, "sim")) {
        const json& s = require_object(*sj, "sim");
        reject_unknown_keys(s, "sim",
                            {"dt", "t_end", "event_time_tol", "constraint_tol", "max_events"});
        sc.sim.dt = get_number(s, "dt", "sim", sc.sim.dt);
        sc.sim.t_end = get_number(s, "t_end", "sim", sc.sim.t_end);
        sc.sim.event_time_tol = get_number(s, "event_time_tol", "sim", sc.sim.event_time_tol);
        sc.sim.constraint_tol = get_number(s, "constraint_tol", "sim", sc.sim.constraint_tol);
        if (const json* me = find(s, "max_events")) {
            if (!me->is_number_integer())
                throw ConfigError("sim.max_events", "expected an integer");
            sc.sim.max_events = me->get<int>();
        }
    }
    try {
        sc.sim.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError("sim", e.what());
    }

    if (const json* oj = find(doc, "output")) {
        const json& o = require_object(*oj, "output");
        reject_unknown_keys(o, "output",
                            {"dir", "trajectory_csv", "metrics_json", "diagnostics_json"});
        if (const json* dir = find(o, "dir")) {
            if (!dir->is_string()) throw ConfigError("output.dir", "expected a string");
            sc.output.dir = dir->get<std::string>();
        }
        sc.output.trajectory_csv = get_bool(o, "trajectory_csv", "output", sc.output.trajectory_csv);
        sc.output.metrics_json = get_bool(o, "metrics_json", "output", sc.output.metrics_json);
        sc.output.diagnostics_json =
            get_bool(o, "diagnostics_json", "output", sc.output.diagnostics_json);
    }

    return sc;
}

json dump_scenario(const Scenario& sc) {
    json doc;
    doc["robot"] = {{"m_o", sc.robot.m_o},   {"m_p", sc.robot.m_p},
                    {"R", sc.robot.R},       {"l_p", sc.robot.l_p},
                    {"I_o", sc.robot.I_o},   {"g", sc.robot.g},
                    {"tau_max", sc.robot.tau_max}, {"mu", sc.robot.mu},
                    {"kv", sc.robot.kv}};
    doc["controller"] = {{"kp", sc.controller.kp},
                         {"tau_max", sc.controller.tau_max},
                         {"saturation_enabled", sc.controller.saturation_enabled}};
    doc["profile"] = sc.profile_name.empty() ? profile_to_json(sc.profile)
                                             : json(sc.profile_name);
    doc["sim"] = {{"dt", sc.sim.dt},
                  {"t_end", sc.sim.t_end},
                  {"event_time_tol", sc.sim.event_time_tol},
                  {"constraint_tol", sc.sim.constraint_tol},
                  {"max_events", sc.sim.max_events}};
    doc["output"] = {{"dir", sc.output.dir},
                     {"trajectory_csv", sc.output.trajectory_csv},
                     {"metrics_json", sc.output.metrics_json},
                     {"diagnostics_json", sc.output.diagnostics_json}};
    return doc;
}

}  // namespace hopwheel
