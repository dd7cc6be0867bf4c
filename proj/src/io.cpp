#include "mhol/io.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace mhol {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& msg) {
  throw Error(ErrorKind::InvalidInput, field + ": " + msg);
}

std::int64_t get_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) bad(field, "expected an integer");
  return v.get<std::int64_t>();
}

const Json& require(const Json& doc, const char* key, const std::string& prefix = "") {
  if (!doc.is_object()) bad(prefix.empty() ? "document" : prefix, "expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) bad(prefix + key, "missing");
  return *it;
}

std::vector<std::vector<std::int64_t>> int_rows(const Json& doc, const std::string& name,
                                                std::optional<std::size_t> cols = std::nullopt) {
  if (!doc.is_array()) bad(name, "expected an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string rf = name + "[" + std::to_string(i) + "]";
    if (!doc[i].is_array()) bad(rf, "expected an array");
    if (cols && doc[i].size() != *cols)
      bad(rf, "expected " + std::to_string(*cols) + " columns, got " + std::to_string(doc[i].size()));
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < doc[i].size(); ++j) row.push_back(get_int(doc[i][j], rf + "[" + std::to_string(j) + "]"));
    if (!rows.empty() && row.size() != rows.front().size())
      bad(rf, "has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(origin, std::string("malformed JSON (") + e.what() + ")");
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

mpz_class big_from(const Json& v, const std::string& field) {
  if (!v.is_string()) bad(field, "expected a decimal string");
  mpz_class out;
  if (out.set_str(v.get<std::string>(), 10) != 0) bad(field, "not a decimal integer");
  return out;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VerificationFailed:
      return 1;
    case ErrorKind::InvalidInput:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ModulusMismatch:
    case ErrorKind::SpecMismatch:
      return 2;
    case ErrorKind::BoundExceeded:
      return 4;
    default:
      return 3;
  }
}

GroupSpec parse_spec(const Json& doc) {
  const std::int64_t p = get_int(require(doc, "p"), "p");
  if (p < 3 || p > 65535) bad("p", "must be an odd prime below 65536, got " + std::to_string(p));
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) bad("p", "must be an odd prime below 65536, got " + std::to_string(p));
  const std::int64_t n = get_int(require(doc, "n"), "n");
  if (n < 2 || n > 16) bad("n", "must lie in [2, 16], got " + std::to_string(n));
  const PrimeField field(static_cast<std::uint32_t>(p));
  const std::size_t m = static_cast<std::size_t>(n * (n - 1) / 2);
  const auto rows = int_rows(require(doc, "D"), "D", m);
  if (rows.size() != static_cast<std::size_t>(n))
    bad("D", "expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  return GroupSpec(field, static_cast<std::size_t>(n), FpMatrix::from_rows(field, rows, m));
}

GroupSpec load_spec(const std::string& path) { return parse_spec(read_file(path)); }

Json spec_to_json(const GroupSpec& spec) {
  return Json{{"p", spec.p()}, {"n", spec.n()}, {"D", matrix_to_json(spec.d())}};
}

FpMatrix parse_matrix(const Json& doc, const PrimeField& field, const std::string& name) {
  const auto rows = int_rows(doc, name);
  return FpMatrix::from_rows(field, rows, rows.empty() ? 0 : rows.front().size());
}

FpMatrix load_matrix(const std::string& path, const PrimeField& field) {
  return parse_matrix(read_file(path), field, path);
}

Json matrix_to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

BilinearForm parse_form(const Json& doc, const GroupSpec& spec) {
  const auto& kind_v = require(doc, "kind");
  if (!kind_v.is_string()) bad("kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  const std::size_t n = spec.n(), m = spec.m();
  if (kind == "power") return power_form(spec, get_int(require(doc, "c"), "c"));
  if (kind == "sigma") {
    FpMatrix s = parse_matrix(require(doc, "S"), spec.field(), "S");
    if (s.rows() != m || s.cols() != m) bad("S", "expected a " + std::to_string(m) + "x" + std::to_string(m) + " matrix");
    return sigma_form(SigmaEndo::from_sigma(spec, s));
  }
  if (kind == "tensor") {
    const Json& t = require(doc, "T");
    if (!t.is_array() || t.size() != n) bad("T", "expected " + std::to_string(n) + " slices");
    std::vector<FpVec> tensor(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::string si = "T[" + std::to_string(i) + "]";
      if (!t[i].is_array() || t[i].size() != n) bad(si, "expected " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) {
        const std::string sj = si + "[" + std::to_string(j) + "]";
        if (!t[i][j].is_array() || t[i][j].size() != m) bad(sj, "expected a vector of length " + std::to_string(m));
        FpVec v(m);
        for (std::size_t r = 0; r < m; ++r) v[r] = spec.field().reduce(get_int(t[i][j][r], sj + "[" + std::to_string(r) + "]"));
        tensor[i * n + j] = std::move(v);
      }
    }
    return BilinearForm(spec, std::move(tensor));
  }
  bad("kind", "expected power, sigma or tensor, got \"" + kind + "\"");
}

Json read_json_arg(const std::string& text_or_path) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(text_or_path, ec)) return read_file(text_or_path);
  return parse_text(text_or_path, "form");
}

std::string to_string(StabilizerStatus s) {
  switch (s) {
    case StabilizerStatus::Trivial:
      return "trivial";
    case StabilizerStatus::Nontrivial:
      return "nontrivial";
    default:
      return "unknown";
  }
}

Json to_json(const AnalysisReport& r) {
  Json out;
  out["spec"] = Json{{"p", r.p}, {"n", r.n}, {"D", matrix_to_json(r.d)}};
  out["m"] = r.m;
  out["pair_order"] = r.pair_order;
  out["rank_D"] = r.rank_d;
  out["omega1_in_derived"] = r.omega1_in_derived;
  out["sym_part_order"] = r.sym_part_order.get_str();
  out["res_group_order"] = r.res_group_order ? Json(r.res_group_order->get_str()) : Json("NotFullRank");
  if (r.tg_order) {
    out["tg_order"] = Json{{"value", r.tg_order->get_str()}, {"tag", r.tg_unconditional ? "unconditional" : "conditional"}};
  } else {
    out["tg_order"] = nullptr;
  }
  out["stabilizer"] = Json{{"status", to_string(r.stabilizer)},
                           {"found", r.stabilizer_found},
                           {"scanned", r.stabilizer_scanned},
                           {"exhaustive", r.stabilizer_exhaustive}};
  out["seconds"] = r.seconds;
  return out;
}

AnalysisReport analysis_from_json(const Json& doc) {
  AnalysisReport r;
  try {
    const GroupSpec spec = parse_spec(require(doc, "spec"));
    r.p = spec.p();
    r.n = spec.n();
    r.d = spec.d();
    r.m = require(doc, "m").get<std::size_t>();
    r.pair_order = require(doc, "pair_order").get<std::string>();
    r.rank_d = require(doc, "rank_D").get<std::size_t>();
    r.omega1_in_derived = require(doc, "omega1_in_derived").get<bool>();
    r.sym_part_order = big_from(require(doc, "sym_part_order"), "sym_part_order");
    const Json& res = require(doc, "res_group_order");
    if (!(res.is_string() && res.get<std::string>() == "NotFullRank")) r.res_group_order = big_from(res, "res_group_order");
    const Json& tg = require(doc, "tg_order");
    if (!tg.is_null()) {
      r.tg_order = big_from(require(tg, "value", "tg_order."), "tg_order.value");
      const std::string tag = require(tg, "tag", "tg_order.").get<std::string>();
      if (tag != "conditional" && tag != "unconditional") bad("tg_order.tag", "unknown tag " + tag);
      r.tg_unconditional = tag == "unconditional";
    }
    const Json& st = require(doc, "stabilizer");
    const std::string status = require(st, "status", "stabilizer.").get<std::string>();
    if (status == "trivial") r.stabilizer = StabilizerStatus::Trivial;
    else if (status == "nontrivial") r.stabilizer = StabilizerStatus::Nontrivial;
    else if (status == "unknown") r.stabilizer = StabilizerStatus::Unknown;
    else bad("stabilizer.status", "unknown status " + status);
    r.stabilizer_found = require(st, "found", "stabilizer.").get<std::size_t>();
    r.stabilizer_scanned = require(st, "scanned", "stabilizer.").get<std::uint64_t>();
    r.stabilizer_exhaustive = require(st, "exhaustive", "stabilizer.").get<bool>();
    r.seconds = require(doc, "seconds").get<double>();
  } catch (const Json::exception& e) {
    bad("report", e.what());
  }
  return r;
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "group        p = " << r.p << ", n = " << r.n << ", m = " << r.m << "\n";
  os << "pair order   " << r.pair_order << "\n";
  os << "D            " << r.d.to_string() << "\n";
  os << "rank D       " << r.rank_d << (r.omega1_in_derived ? " (Omega_1(G) <= G')" : "") << "\n";
  os << "|S|          " << r.sym_part_order.get_str() << "\n";
  os << "|res(S')|    " << (r.res_group_order ? r.res_group_order->get_str() : "NotFullRank") << "\n";
  if (r.tg_order)
    os << "T(G) order   " << r.tg_order->get_str() << (r.tg_unconditional ? " (unconditional)" : " (conditional: subgroup of T(G))")
       << "\n";
  os << "stabilizer   " << to_string(r.stabilizer) << ", " << r.stabilizer_found << " found in " << r.stabilizer_scanned
     << (r.stabilizer_exhaustive ? " (exhaustive)" : " (sampled)") << "\n";
  os << "time         " << r.seconds << " s\n";
  return os.str();
}

}  // namespace mhol
