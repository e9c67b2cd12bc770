#pragma once
// Point-set and weight ingestion plus JSON report plumbing.
//
// Two input shapes:
//  - JSON document {"p": <num>, "cells": [...], "points": [[...], ...]}
//  - CSV, one point per row, cells as columns; p (and optionally the cell
//    measures) supplied separately since CSV carries coefficients only.

#include <optional>
#include <string>
#include <vector>

#include "lpx/space.hpp"

namespace lpx::io {

PointSet read_point_set_json(const std::string& path);

// `cells` empty means unit measure per column.
PointSet read_point_set_csv(const std::string& path, double p, const std::vector<double>& cells);

// Dispatch on extension: ".json" -> JSON document, anything else -> CSV
// (which then requires p > 0; `cells` may be empty).
PointSet read_point_set(const std::string& path, std::optional<double> p,
                        const std::vector<double>& cells);

// One row of convex weights, CSV ("0.5,0.25,0.25") or JSON array file.
SimplexWeights read_weights(const std::string& path, std::size_t expected);

// Serialized {"schema":"1","p":...,"cells":[...],"points":[[...]]} document;
// `extra` lines ("\"seed\": 7") are spliced in by the callers via the JSON
// object the function returns, see gallery CLI.
std::string point_set_to_json(const PointSet& set);

// Parse a comma-separated list of strictly positive reals (CLI --cells).
std::vector<double> parse_measure_list(const std::string& text);

}  // namespace lpx::io
