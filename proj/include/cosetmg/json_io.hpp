#pragma once

#include <string>

#include "cosetmg/functor_g.hpp"
#include "cosetmg/functor_w.hpp"
#include "cosetmg/profinite.hpp"
#include "cosetmg/report.hpp"

namespace cosetmg {

// Formats:
//   group    {"degree": n, "generators": [[images...], ...], "name": str}
//   groupoid {"size": m, "inverse": [...], "meet": [[...]], "product": [[a,b,c], ...],
//             "labels": [...]?, "provenance": {"group": ..., "basis": [...]}?}
//   tower    {"levels": [group...], "maps": [[...], ...]}
//   filter   {"choices": [[idempotent, coset], ...]}

std::string group_to_json(const PermGroup& G, const std::string& name);
PermGroup group_from_json(const std::string& text, std::string* name_out = nullptr);

std::string groupoid_to_json(const MeetGroupoid& M);
std::string groupoid_to_json(const CosetGroupoid& W);
MeetGroupoid groupoid_from_json(const std::string& text);

std::string tower_to_json(const InverseSystem& sys);
InverseSystem tower_from_json(const std::string& text);

std::string filter_to_json(const FullFilter& R);

std::string report_to_json(const Report& rep);

/// Hasse diagram of the idempotent containment order, in DOT.
std::string idempotent_order_dot(const MeetGroupoid& M);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace cosetmg
