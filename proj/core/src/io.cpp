#include "socsim/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "socsim/error.hpp"

namespace socsim {

namespace {

using nlohmann::json;

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field += c;
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_tags(const std::string& s) {
    std::vector<std::string> tags;
    std::string tag;
    std::istringstream in(s);
    while (std::getline(in, tag, ';'))
        if (!tag.empty()) tags.push_back(tag);
    return tags;
}

std::string join_tags(const std::vector<std::string>& tags) {
    std::string out;
    for (std::size_t i = 0; i < tags.size(); ++i) {
        if (i) out += ';';
        out += tags[i];
    }
    return out;
}

Timestamp parse_time(const std::string& s, std::size_t line_no) {
    Timestamp t{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), t);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(ErrorCode::ParseError, "bad time '" + s + "' on line " + std::to_string(line_no));
    return t;
}

double parse_strength(const std::string& s, std::size_t line_no) {
    double v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        throw Error(ErrorCode::ParseError,
                    "bad strength '" + s + "' on line " + std::to_string(line_no));
    return v;
}

InteractionKind parse_kind_or_throw(const std::string& s, std::size_t line_no) {
    auto kind = parse_interaction_kind(s);
    if (!kind)
        throw Error(ErrorCode::ParseError, "bad kind '" + s + "' on line " + std::to_string(line_no));
    return *kind;
}

json semantics_to_json(const TokenCounts& tokens) {
    json out = json::object();
    for (const auto& [token, count] : tokens) out[token] = count;
    return out;
}

json distribution_strengths(const RoleProfile& p) {
    json out = json::object();
    for (int i = 0; i < kDomainRoleCount; ++i)
        out[to_string(static_cast<DomainRole>(i))] = p.strengths[i];
    return out;
}

} // namespace

std::string format_double(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (std::isnan(v)) return "nan";
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

std::vector<InteractionEvent> read_events_csv(const std::string& text) {
    std::vector<InteractionEvent> events;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto fields = split_csv_line(line);
        if (!header_seen) {
            header_seen = true;
            if (fields.size() >= 5 && fields[0] == "time") continue; // header row
        }
        if (fields.size() != 6)
            throw Error(ErrorCode::ParseError,
                        "expected 6 fields on line " + std::to_string(line_no));
        InteractionEvent e;
        e.time = parse_time(fields[0], line_no);
        e.initiator = fields[1];
        e.receiver = fields[2];
        e.kind = parse_kind_or_throw(fields[3], line_no);
        e.strength = parse_strength(fields[4], line_no);
        e.tags = split_tags(fields[5]);
        events.push_back(std::move(e));
    }
    return events;
}

std::vector<InteractionEvent> read_events_jsonl(const std::string& text) {
    std::vector<InteractionEvent> events;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw Error(ErrorCode::ParseError, "bad JSON on line " + std::to_string(line_no));
        InteractionEvent e;
        try {
            e.time = j.at("time").get<Timestamp>();
            e.initiator = j.at("initiator").get<std::string>();
            e.receiver = j.at("receiver").get<std::string>();
            e.kind = parse_kind_or_throw(j.at("kind").get<std::string>(), line_no);
            e.strength = j.value("strength", 1.0);
            if (j.contains("tags")) e.tags = j["tags"].get<std::vector<std::string>>();
        } catch (const json::exception& ex) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": " + ex.what());
        }
        events.push_back(std::move(e));
    }
    return events;
}

std::string write_events_csv(std::span<const InteractionEvent> events) {
    std::string out = "time,initiator,receiver,kind,strength,tags\n";
    for (const auto& e : events) {
        out += std::to_string(e.time);
        out += ',' + csv_escape(e.initiator);
        out += ',' + csv_escape(e.receiver);
        out += ',';
        out += to_string(e.kind);
        out += ',' + format_double(e.strength);
        out += ',' + csv_escape(join_tags(e.tags));
        out += '\n';
    }
    return out;
}

InteractionLog load_event_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    const auto ext = path.extension().string();
    std::vector<InteractionEvent> events;
    if (ext == ".jsonl" || ext == ".ndjson" || ext == ".json")
        events = read_events_jsonl(text);
    else
        events = read_events_csv(text);
    InteractionLog log;
    log.bulk_load(std::move(events));
    return log;
}

void save_event_file(const std::filesystem::path& path, const InteractionLog& log) {
    write_text_file(path, write_events_csv(log.events()));
}

std::string write_snapshot_json(const SocietySnapshot& s) {
    json out;
    out["time"] = s.time;
    out["entities"] = s.entities;

    json attrs = json::object();
    for (const auto& [id, row] : s.attributes.rows()) {
        json cells = json::object();
        for (const auto& [name, value] : row) cells[name] = value;
        attrs[id] = cells;
    }
    out["attributes"] = attrs;

    json relations;
    relations["as_of"] = s.relations.as_of();
    json edges = json::array();
    for (const auto& [key, e] : s.relations.edges()) {
        json edge;
        edge["initiator"] = e.initiator;
        edge["receiver"] = e.receiver;
        edge["strength"] = e.strength;
        edge["semantics"] = semantics_to_json(e.semantics);
        edges.push_back(edge);
    }
    relations["edges"] = edges;
    out["relations"] = relations;

    json groups = json::array();
    for (const auto& g : s.groups) {
        json grp;
        grp["id"] = g.id;
        grp["members"] = g.members;
        json phi = json::object();
        for (const auto& [id, v] : g.membership_strength) phi[id] = v;
        grp["phi"] = phi;
        grp["subject_matter"] = semantics_to_json(g.subject_matter);
        grp["born_at"] = g.born_at;
        groups.push_back(grp);
    }
    out["groups"] = groups;

    json roles = json::object();
    for (const auto& [id, profile] : s.roles) {
        json r;
        r["strengths"] = distribution_strengths(profile);
        r["dominant"] = profile.dominant ? json(to_string(*profile.dominant)) : json(nullptr);
        auto cat = s.categories.find(id);
        r["category"] = cat != s.categories.end() ? json(to_string(cat->second)) : json(nullptr);
        roles[id] = r;
    }
    out["roles"] = roles;

    json thresholds;
    thresholds["observer_total"] = s.thresholds_used.observer_total;
    thresholds["active"] = s.thresholds_used.active;
    thresholds["low"] = s.thresholds_used.low;
    thresholds["betweenness_median"] = s.thresholds_used.betweenness_median;
    out["thresholds"] = thresholds;

    return out.dump(2) + "\n";
}

std::string write_metrics_csv(const SocietySnapshot& s) {
    std::vector<std::string> metric_names(std::begin(kMetricNames), std::end(kMetricNames));
    std::sort(metric_names.begin(), metric_names.end());

    std::string out = "entity,metric,value\n";
    for (const auto& metric : metric_names) {
        auto column = s.attributes.column(kSnaNamespace, metric);
        for (const auto& [id, value] : column) {
            out += csv_escape(id);
            out += ',' + metric;
            out += ',' + format_double(value);
            out += '\n';
        }
    }
    return out;
}

std::string write_groups_json(const std::vector<Group>& groups) {
    json out = json::array();
    for (const auto& g : groups) {
        json grp;
        grp["id"] = g.id;
        grp["members"] = g.members;
        json phi = json::object();
        for (const auto& [id, v] : g.membership_strength) phi[id] = v;
        grp["phi"] = phi;
        grp["subject_matter"] = semantics_to_json(g.subject_matter);
        grp["born_at"] = g.born_at;
        out.push_back(grp);
    }
    return out.dump(2) + "\n";
}

std::string write_evolution_csv(
    const std::vector<std::pair<std::string, std::vector<GroupEvolutionEvent>>>& windows) {
    std::string out = "window,kind,from,to,jaccard\n";
    for (const auto& [window, events] : windows) {
        for (const auto& e : events) {
            std::string from, to;
            for (std::size_t i = 0; i < e.from.size(); ++i) from += (i ? ";" : "") + e.from[i];
            for (std::size_t i = 0; i < e.to.size(); ++i) to += (i ? ";" : "") + e.to[i];
            out += csv_escape(window);
            out += ',';
            out += to_string(e.kind);
            out += ',' + csv_escape(from);
            out += ',' + csv_escape(to);
            out += ',' + format_double(e.jaccard);
            out += '\n';
        }
    }
    return out;
}

std::string write_roles_csv(const SocietySnapshot& s) {
    std::string out = "entity,friendsmaker,talker,surfer,host,traveller,dominant,category\n";
    for (const auto& id : s.entities) {
        out += csv_escape(id);
        for (int i = 0; i < kDomainRoleCount; ++i) {
            double v = s.attributes.get(id, kDomainNamespace,
                                        to_string(static_cast<DomainRole>(i)));
            out += ',' + format_double(v);
        }
        auto role = s.roles.find(id);
        out += ',';
        if (role != s.roles.end() && role->second.dominant)
            out += to_string(*role->second.dominant);
        auto cat = s.categories.find(id);
        out += ',';
        if (cat != s.categories.end()) out += to_string(cat->second);
        out += '\n';
    }
    return out;
}

std::string write_thresholds_json(const RoleThresholds& t) {
    json out;
    out["observer_total"] = t.observer_total;
    out["active"] = t.active;
    out["low"] = t.low;
    out["betweenness_median"] = t.betweenness_median;
    return out.dump(2) + "\n";
}

std::string write_predictions_csv(std::span<const CandidatePair> ranked) {
    std::string out = "model,u,v,score,rank\n";
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& c = ranked[i];
        out += to_string(c.model);
        out += ',' + csv_escape(c.u);
        out += ',' + csv_escape(c.v);
        out += ',' + format_double(c.score);
        out += ',' + std::to_string(i + 1);
        out += '\n';
    }
    return out;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
    out << content;
    if (!out) throw Error(ErrorCode::IoError, "short write to " + path.string());
}

} // namespace socsim
