#pragma once

#include <iosfwd>
#include <string>

#include "anyon/anyon_model.h"

namespace anyon {

/// Anyon model files are JSON objects with exactly these members:
///
///   labels  array of strings, vacuum "1" first
///   dual    object label -> label (entries may be missing; validation
///           reports them)
///   fusion  array of [a, b, c, N]; omitted channels are 0
///   r       array of [a, b, c, re, im]
///   f       optional array of [a, b, c, d, re, im]; omitted entries are 1
///
/// Any other member, a label not declared in `labels`, or a malformed entry
/// raises parse_error naming the offending field.
AnyonModel parse_model(const std::string &text);
AnyonModel load_model_file(const std::string &path);

/// Inverse of parse_model. Fusion channels with N = 0 are omitted.
std::string model_to_json(const AnyonModel &model);

}  // namespace anyon
