#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "smooth/brackets.hpp"
#include "smooth/classify.hpp"
#include "smooth/inertia.hpp"
#include "smooth/manifold.hpp"
#include "smooth/tables.hpp"

namespace smooth {

using json = nlohmann::json;

json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const json& j);

json to_json(const GroupResult& r);
GroupResult result_from_json(const json& j);

json to_json(const StableSplitting& s);
json to_json(const InertiaResult& r);
json to_json(const ClassificationReport& r);
json to_json(const std::vector<Diagnostic>& diags);
json to_json(const GradedTable& t);
json to_json(const MapImageTable& t);

std::string render(const GroupResult& r);
std::string render(const StableSplitting& s);
std::string render(const InertiaResult& r);
std::string render(const ClassificationReport& r);
std::string render(const GradedTable& t);
std::string render(const MapImageTable& t);
std::string render(const std::vector<Diagnostic>& diags);

}  // namespace smooth
