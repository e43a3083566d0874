#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "weilbound/factor.hpp"
#include "weilbound/lattice.hpp"
#include "weilbound/tate_bounds.hpp"
#include "weilbound/weil.hpp"

namespace weilbound {

using Json = nlohmann::ordered_json;

/// {"coeffs": ["c0", "c1", ...]}, ascending, decimal strings.
Json to_json(const IntPoly& p);
/// Rational coefficients as {"num": "...", "den": "..."}.
Json to_json(const RatPoly& p);

/// Accepts decimal strings or JSON integers. Throws std::invalid_argument.
IntPoly int_poly_from_json(const Json& j);
RatPoly rat_poly_from_json(const Json& j);

/// Reads a polynomial file; throws std::invalid_argument on I/O or parse failure.
IntPoly read_poly_file(const std::filesystem::path& path);

/// JSON array of polynomial objects, in the given order.
std::string census_json(const std::vector<IntPoly>& polys);
/// Header g,q,a0..a(2g) with a_i the coefficient of x^(2g-i); no quoting, LF endings.
std::string census_csv(const WeilParams& params, const std::vector<IntPoly>& polys);

/// {"g", "q", "count", "bound"}: the census size is an upper bound on the
/// number of isogeny classes, not a count of them.
std::string count_json(const WeilParams& params, std::size_t count);
/// Header g,q,count.
std::string count_csv(const WeilParams& params, std::size_t count);

std::string bounds_json(const BoundsReport& report);
std::string factor_json(const std::vector<FactorPower>& factors);

/// One record per lattice: {l, k, charpoly, hnf (row-major), index, profile, class_id}.
/// `classification` may be null, in which case class_id is null.
std::string lattices_json(const FrobeniusMatrix& c, const std::vector<LatticeBasis>& lattices,
                          const std::vector<InducedAction>& actions, const ActionClassification* classification,
                          unsigned long l, int k);

}  // namespace weilbound
