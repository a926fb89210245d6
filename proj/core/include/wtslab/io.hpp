#pragma once

#include "wtslab/comma.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <vector>

namespace wtslab::io
{

using json = nlohmann::json;

/// {"sigma": [...], "states": [...], "actions": {id: label},
///  "transitions": [[source, [action ids], target], ...]}
/// Malformed documents raise input_error.
raw_system raw_from_json( const json& doc );
/// Parsed and checked: the document must describe a weak transition system.
system_ptr system_from_json( const json& doc );
/// Canonical form: sorted keys, sorted bodies, sorted transition list.
json to_json( const wts& x );
json to_json( const raw_system& raw );

/// A system document with an extra "point" field.
pointed_wts pointed_from_json( const json& doc );
json to_json( const pointed_wts& p );

/// {"source": system, "target": system, "stateMap": {..}, "actionMap": {..}};
/// a pointed morphism document has pointed source and target.
morphism morphism_from_json( const json& doc );
json to_json( const morphism& f );
pointed_morphism pointed_morphism_from_json( const json& doc );
json to_json( const pointed_morphism& f );

/// A list of morphism documents, or an object with an "arrows" list.
std::vector<morphism> arrows_from_json( const json& doc );
json to_json( const std::vector<morphism>& arrows );

json to_json( const transition& t, const wts& x );
json to_json( const validation_report& report );

/// Reads and parses a JSON file; I/O and syntax errors raise input_error.
json load( const std::filesystem::path& path );

/// Canonical text: two-space indentation and a trailing newline.
std::string dump( const json& doc );

} // namespace wtslab::io
