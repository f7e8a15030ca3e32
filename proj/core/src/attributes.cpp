#include "socsim/attributes.hpp"

namespace socsim {

namespace {
std::string qualified(const std::string& ns, const std::string& name) { return ns + ":" + name; }
} // namespace

void AttributeTable::set(const EntityId& id, const std::string& ns, const std::string& name,
                         double value) {
    rows_[id][qualified(ns, name)] = value;
}

double AttributeTable::get(const EntityId& id, const std::string& ns, const std::string& name,
                           double fallback) const {
    auto row = rows_.find(id);
    if (row == rows_.end()) return fallback;
    auto cell = row->second.find(qualified(ns, name));
    return cell == row->second.end() ? fallback : cell->second;
}

bool AttributeTable::has_entity(const EntityId& id) const { return rows_.count(id) != 0; }

std::map<EntityId, double> AttributeTable::column(const std::string& ns,
                                                  const std::string& name) const {
    std::map<EntityId, double> out;
    const std::string key = qualified(ns, name);
    for (const auto& [id, row] : rows_) {
        auto cell = row.find(key);
        if (cell != row.end()) out[id] = cell->second;
    }
    return out;
}

} // namespace socsim
