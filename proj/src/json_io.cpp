#include "dslice/json_io.hpp"


#include "dslice/errors.hpp"

namespace dslice {

Json to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) && sizeof(long) == sizeof(std::int64_t)) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const Rational& r) { return Json(r.to_string()); }

Json to_json(const BigVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries"))
    throw PreconditionError("matrix JSON needs \"n\" and \"entries\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0)
    throw PreconditionError("matrix \"n\" must be a non-negative integer");
  const auto n = doc["n"].get<std::size_t>();
  const Json& rows = doc["entries"];
  if (!rows.is_array() || rows.size() != n) throw PreconditionError("matrix \"entries\" must have n rows");
  std::vector<std::int64_t> flat;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw PreconditionError("every matrix row must have n entries");
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw PreconditionError("matrix entries must be integers");
      flat.push_back(v.get<std::int64_t>());
    }
  }
  return IntMatrix::from_row_major(n, n, std::move(flat));
}

Json matrix_to_json(const IntMatrix& m) { return Json{{"n", m.rows()}, {"entries", to_json(m)}}; }

LinkData link_data_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("lk") || !doc.contains("slice"))
    throw PreconditionError("link data JSON needs \"n\", \"lk\" and \"slice\"");
  LinkData data;
  try {
    data.n = doc["n"].get<std::size_t>();
    data.lk = doc["lk"].get<std::vector<std::vector<std::int64_t>>>();
    data.slice = doc["slice"].get<std::vector<bool>>();
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed link data: ") + e.what());
  }
  data.validate();
  return data;
}

}  // namespace dslice
