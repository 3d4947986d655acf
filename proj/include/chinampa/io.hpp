#pragma once

#include <string>

#include <json.hpp>

#include "chinampa/cascade_engine.hpp"
#include "chinampa/graph_model.hpp"
#include "chinampa/pyramid_calculus.hpp"

namespace chinampa {

using Json = nlohmann::ordered_json;

Network network_from_json(const Json& doc);
Json network_to_json(const Network& network);

StvSet stimuli_from_json(const Json& doc);
Json stimuli_to_json(const StvSet& stimuli);

Json activation_to_json(const ActivationDiagram& diagram);
Json factorization_to_json(const Factorization& factorization);
Factorization factorization_from_json(const Json& doc);

// Whole-file readers; failures surface as parse errors.
Json read_json_file(const std::string& path);
Network read_network_file(const std::string& path);
StvSet read_stimuli_file(const std::string& path);

}  // namespace chinampa
