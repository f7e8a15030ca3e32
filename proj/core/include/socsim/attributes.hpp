#ifndef SOCSIM_ATTRIBUTES_HPP_
#define SOCSIM_ATTRIBUTES_HPP_

#include <map>
#include <string>

#include "socsim/types.hpp"

namespace socsim {

/// Attribute namespaces. "domain" holds portal activity measures, "sna" holds
/// derived graph measures (recomputable from the relation graph).
inline constexpr const char* kDomainNamespace = "domain";
inline constexpr const char* kSnaNamespace = "sna";

/// Per-entity named real values, keyed as "<namespace>:<name>".
class AttributeTable {
  public:
    void set(const EntityId& id, const std::string& ns, const std::string& name, double value);
    double get(const EntityId& id, const std::string& ns, const std::string& name,
               double fallback = 0.0) const;
    bool has_entity(const EntityId& id) const;

    /// Values of one namespaced attribute across entities that carry it.
    std::map<EntityId, double> column(const std::string& ns, const std::string& name) const;

    const std::map<EntityId, std::map<std::string, double>>& rows() const { return rows_; }

    bool operator==(const AttributeTable& other) const { return rows_ == other.rows_; }

  private:
    std::map<EntityId, std::map<std::string, double>> rows_;
};

} // namespace socsim

#endif
