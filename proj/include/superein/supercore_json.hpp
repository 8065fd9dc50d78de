#pragma once

#include "superein/supercore.hpp"

#include <json.hpp>

namespace superein {

/// {"dim_even","dim_odd","parity","c":[[i,j,k,re,im],...],"decomposition":[[start,end,kind],...]}
/// Entries with modulus below 1e-14 are omitted.
nlohmann::json algebra_to_json(const LieSuperAlgebra& alg);
LieSuperAlgebra algebra_from_json(const nlohmann::json& doc);

/// {"dim","gram":[[i,j,re,im],...],"flags":{...}}
nlohmann::json form_to_json(const BilinearFormMatrix& form);
BilinearFormMatrix form_from_json(const nlohmann::json& doc);

} // namespace superein
