#pragma once

// Deterministic text / JSON / CSV reports and DOT exports of the diagrams.

#include <string>
#include <string_view>

#include "rootposet/root_system.hpp"

namespace rootposet {

enum class ReportTopic { Roots, Hasse, Ideals, Abelian, Classes, Covering };
enum class ReportFormat { Text, Json, Csv };
enum class Diagram { Delta, Ad, Ab };

/// Each throws UnsupportedInput for an unknown name.
ReportTopic parse_topic(std::string_view name);
ReportFormat parse_format(std::string_view name);
Diagram parse_diagram(std::string_view name);

std::string report(const RootSystem& rs, ReportTopic topic, ReportFormat format);

/// DOT digraph of H(Delta+), H(AD) or H(Ab) with typed edges.
std::string export_diagram(const RootSystem& rs, Diagram diagram);

}  // namespace rootposet
