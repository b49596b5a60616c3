#pragma once

// JSON documents ("schema": "fairsquare/1") and SVG rendering. Infinite
// coordinates are written as the strings "inf" and "-inf".

#include <string>
#include <vector>

#include "fairsquare/adversary.hpp"
#include "fairsquare/protocols.hpp"

namespace fsq {

inline constexpr const char* kSchema = "fairsquare/1";

// Density: {"xs": [...], "ys": [...], "cells": [[...]]}; cells[iy][ix].
std::string density_to_json(const GridDensity& d);
GridDensity density_from_json(const std::string& text);

std::string cake_to_json(const CakeDomain& cake);
CakeDomain cake_from_json(const std::string& text);

std::string piece_to_json(const Piece& p);
Piece piece_from_json(const std::string& text);

// Report plus the cake it divides.
std::string report_to_json(const DivisionReport& rep, const CakeDomain& cake);
DivisionReport report_from_json(const std::string& text, CakeDomain* cake = nullptr);

// Instance: {"schema", "cake", "agents": [{"id", "density"}], "procedure"?}.
struct Instance {
    CakeDomain cake;
    std::vector<Agent> agents;
    std::string procedure = "auto";
};
std::string instance_to_json(const Instance& in);
// Agents from a single density, a list of densities or of {"id", "density"},
// or an object with an "agents" list. Missing ids count up from `first_id`.
std::vector<Agent> agents_from_json(const std::string& text, int first_id = 1);
Instance instance_from_json(const std::string& text);

// Pool arrangement: the density document plus pool geometry and the cake.
std::string pools_to_json(const PoolArrangement& a);

// Deterministic drawing: walls solid, open sides dotted, one colour per agent
// and a legend with each agent's fraction.
std::string render_svg(const DivisionReport& rep, const CakeDomain& cake);

std::string read_file(const std::string& path);
// Writes through a temporary file and renames it into place.
void write_file(const std::string& path, const std::string& text);

} // namespace fsq
