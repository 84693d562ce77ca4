#include "finstrain/batch.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

namespace finstrain::batch {

using nlohmann::json;

RequestError::RequestError(std::vector<std::string> diagnostics)
    : InvalidInput([&] {
        std::string all;
        for (const auto &d : diagnostics)
          all += (all.empty() ? "" : "\n") + d;
        return all;
      }()),
      diagnostics_(std::move(diagnostics)) {}

namespace {

std::string shortest(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Reads a 3x3 matrix given flat (9 numbers) or nested (3 rows of 3).
std::optional<Tensor3> read_matrix(const json &node, std::string &why) {
  std::vector<double> values;
  if (!node.is_array()) {
    why = "expected an array of 9 numbers or 3 rows of 3";
    return std::nullopt;
  }
  if (node.size() == 3 && node[0].is_array()) {
    for (const auto &row : node) {
      if (!row.is_array() || row.size() != 3) {
        why = "each row must hold exactly 3 numbers";
        return std::nullopt;
      }
      for (const auto &x : row)
        values.push_back(x.is_number() ? x.get<double>() : NAN);
    }
  } else if (node.size() == 9) {
    for (const auto &x : node)
      values.push_back(x.is_number() ? x.get<double>() : NAN);
  } else {
    why = "expected an array of 9 numbers or 3 rows of 3";
    return std::nullopt;
  }
  for (double x : values) {
    if (!std::isfinite(x)) {
      why = "entries must be finite numbers";
      return std::nullopt;
    }
  }
  return Tensor3::from_row_major(std::span<const double, 9>(values.data(), 9));
}

StrainFamily read_family(const json &node) {
  if (node.is_string())
    return StrainFamily::parse(node.get<std::string>());
  if (node.is_object()) {
    if (!node.contains("name") || !node["name"].is_string())
      throw InvalidInput("family object needs a string 'name'");
    std::optional<double> m;
    if (node.contains("m")) {
      if (!node["m"].is_number())
        throw InvalidInput("family parameter 'm' must be a number");
      m = node["m"].get<double>();
    }
    return StrainFamily::builtin(node["name"].get<std::string>(), m);
  }
  throw InvalidInput("family must be a string or an object");
}

EnergyPotential read_energy(const json &node) {
  if (node.is_string())
    return EnergyPotential::builtin(node.get<std::string>());
  if (!node.is_object())
    throw InvalidInput("energy must be a string or an object");
  const bool has_coeffs = node.contains("lambda") || node.contains("mu");
  std::string name = "quadratic-hencky";
  if (node.contains("name")) {
    if (!node["name"].is_string())
      throw InvalidInput("energy 'name' must be a string");
    name = node["name"].get<std::string>();
  }
  if (!has_coeffs)
    return EnergyPotential::builtin(name);
  if (name != "quadratic-hencky")
    throw InvalidInput("coefficients lambda/mu only apply to quadratic-hencky");
  auto coeff = [&](const char *key) {
    if (!node.contains(key))
      return 1.0;
    if (!node[key].is_number())
      throw InvalidInput(std::string("energy '") + key + "' must be a number");
    const double x = node[key].get<double>();
    if (!std::isfinite(x))
      throw InvalidInput(std::string("energy '") + key + "' must be finite");
    return x;
  };
  return EnergyPotential::quadratic_hencky(coeff("lambda"), coeff("mu"));
}

} // namespace

BatchRequest parse_request(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw RequestError({std::string("request is not valid JSON: ") + e.what()});
  }
  if (!doc.is_object())
    throw RequestError({"request must be a JSON object"});

  std::vector<std::string> diag;
  BatchRequest req;

  if (doc.contains("frame")) {
    try {
      if (!doc["frame"].is_string())
        throw InvalidInput("frame must be a string");
      req.frame = parse_frame(doc["frame"].get<std::string>());
    } catch (const Error &e) {
      diag.push_back(std::string("field 'frame': ") + e.what());
    }
  }
  if (doc.contains("family")) {
    try {
      req.family = read_family(doc["family"]);
    } catch (const Error &e) {
      diag.push_back(std::string("field 'family': ") + e.what());
    }
  }
  if (doc.contains("energy") && !doc["energy"].is_null()) {
    try {
      req.energy = read_energy(doc["energy"]);
    } catch (const Error &e) {
      diag.push_back(std::string("field 'energy': ") + e.what());
    }
  }

  if (!doc.contains("entries") || !doc["entries"].is_array()) {
    diag.emplace_back("field 'entries': expected an array");
    throw RequestError(std::move(diag));
  }

  std::size_t index = 0;
  for (const auto &node : doc["entries"]) {
    const std::string where_index = "entry #" + std::to_string(index++);
    if (!node.is_object()) {
      diag.push_back(where_index + ": expected an object");
      continue;
    }
    BatchEntry entry;
    if (!node.contains("id") || !node["id"].is_string()) {
      diag.push_back(where_index + ": field 'id': missing or not a string");
      continue;
    }
    entry.id = node["id"].get<std::string>();
    const std::string where = "entry '" + entry.id + "'";

    std::string why;
    if (!node.contains("F")) {
      diag.push_back(where + ": field 'F': missing");
      continue;
    }
    auto f = read_matrix(node["F"], why);
    if (!f) {
      diag.push_back(where + ": field 'F': " + why);
      continue;
    }
    const double det = f->det();
    if (!(det > 0.0)) {
      diag.push_back(where + ": field 'F': det F = " + shortest(det) +
                     " must be positive");
      continue;
    }
    entry.F = *f;

    if (node.contains("chart") && !node["chart"].is_null()) {
      const auto &c = node["chart"];
      if (!c.is_object() || !c.contains("J") || !c.contains("J_hat")) {
        diag.push_back(where + ": field 'chart': needs 'J' and 'J_hat'");
        continue;
      }
      auto j = read_matrix(c["J"], why);
      if (!j) {
        diag.push_back(where + ": field 'chart.J': " + why);
        continue;
      }
      auto j_hat = read_matrix(c["J_hat"], why);
      if (!j_hat) {
        diag.push_back(where + ": field 'chart.J_hat': " + why);
        continue;
      }
      try {
        entry.chart = chart_from_jacobians(*j, *j_hat);
      } catch (const Error &e) {
        diag.push_back(where + ": field 'chart': " + e.what());
        continue;
      }
    }
    if (node.contains("variance") && !node["variance"].is_null()) {
      try {
        if (!node["variance"].is_string())
          throw InvalidInput("variance must be a string");
        entry.variance = parse_variance(node["variance"].get<std::string>());
      } catch (const Error &e) {
        diag.push_back(where + ": field 'variance': " + e.what());
        continue;
      }
    }
    req.entries.push_back(std::move(entry));
  }

  if (!diag.empty())
    throw RequestError(std::move(diag));
  return req;
}

void apply_overrides(BatchRequest &request, const Overrides &overrides) {
  if (overrides.family)
    request.family = StrainFamily::parse(*overrides.family);
  if (overrides.frame)
    request.frame = *overrides.frame;
  if (overrides.variance)
    for (auto &e : request.entries)
      e.variance = overrides.variance;
}

Sym6 to_sym6(const Tensor3 &t) {
  return {t(0, 0), t(1, 1), t(2, 2), t(0, 1), t(1, 2), t(0, 2)};
}

ResultRow compute_row(const BatchEntry &entry, const BatchRequest &request,
                      TableKind kind) {
  ResultRow row;
  row.id = entry.id;
  try {
    const StrainState s = strain(entry.F, request.family, request.frame);
    const SymTensor3 d =
        richter_deviator(entry.F, request.family, request.frame);
    const StrainInvariants inv = strain_invariants(entry.F);
    const DeformationCharacter ch = classify(inv);

    ResultRow out;
    out.id = entry.id;
    out.v = inv.v;
    out.j = inv.j;
    out.y = inv.y;
    out.z = inv.z;
    out.zeta = inv.zeta;
    out.character = std::string(to_string(ch.kind));
    out.sqrt_y = inv.amount;
    out.E = to_sym6(s.E);
    out.D = to_sym6(d);

    if (kind == TableKind::Stress) {
      if (!request.energy)
        throw InvalidInput("stress table requires an energy potential");
      const StressState st = cauchy_stress(entry.F, *request.energy);
      out.tau = to_sym6(st.tau);
      out.sigma = to_sym6(st.sigma);
      out.mean = st.mean;
      if (entry.chart) {
        const Tensor3 tilde =
            transform_stress(st.sigma, *entry.chart,
                             entry.variance.value_or(VarianceCase::Beta));
        std::array<double, 9> flat{};
        std::copy(tilde.row_major().begin(), tilde.row_major().end(),
                  flat.begin());
        out.sigma_tilde = flat;
      }
    }
    row = std::move(out);
  } catch (const Error &e) {
    row.error = e.what();
  }
  return row;
}

std::vector<ResultRow> run(const BatchRequest &request, TableKind kind,
                           const RunOptions &options) {
  std::vector<ResultRow> rows(request.entries.size());
  if (!options.parallel || rows.size() < 2) {
    for (std::size_t i = 0; i < rows.size(); ++i)
      rows[i] = compute_row(request.entries[i], request, kind);
    return rows;
  }
  unsigned n = options.threads ? options.threads
                               : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(rows.size()));
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < rows.size(); i = next++)
        rows[i] = compute_row(request.entries[i], request, kind);
    });
  }
  workers.clear(); // joins
  return rows;
}

std::string format_number(double x, const NumberFormat &fmt) {
  char buf[64];
  std::to_chars_result res;
  if (fmt.digits)
    res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general,
                        std::clamp(*fmt.digits, 1, 17));
  else
    res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

namespace {

constexpr std::array<const char *, 6> kSymSuffix{"11", "22", "33",
                                                 "12", "23", "13"};

void push_sym(std::vector<std::string> &h, const std::string &prefix) {
  for (const char *s : kSymSuffix)
    h.push_back(prefix + s);
}

std::string quote(const std::string &cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos)
    return cell;
  std::string q = "\"";
  for (char c : cell) {
    if (c == '"')
      q += '"';
    q += c;
  }
  return q + '"';
}

// Splits a CSV document into records of cells (RFC 4180 quoting).
std::vector<std::vector<std::string>> split_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string cell;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      record.push_back(std::move(cell));
      cell.clear();
      any = true;
    } else if (c == '\n') {
      record.push_back(std::move(cell));
      cell.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      cell += c;
      any = true;
    }
  }
  if (quoted)
    throw InvalidInput("CSV ends inside a quoted cell");
  if (any) {
    record.push_back(std::move(cell));
    records.push_back(std::move(record));
  }
  return records;
}

std::optional<double> parse_number(const std::string &cell, std::size_t line,
                                   const std::string &column) {
  if (cell.empty())
    return std::nullopt;
  double x = 0.0;
  auto res = std::from_chars(cell.data(), cell.data() + cell.size(), x);
  if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size())
    throw InvalidInput("line " + std::to_string(line) + ", column '" + column +
                       "': cannot parse number '" + cell + "'");
  return x;
}

} // namespace

std::vector<std::string> header(TableKind kind) {
  std::vector<std::string> h{"id", "v", "j", "y", "z", "zeta", "class",
                             "sqrt_y"};
  push_sym(h, "E");
  push_sym(h, "D");
  if (kind == TableKind::Stress) {
    push_sym(h, "tau");
    push_sym(h, "sigma");
    h.emplace_back("mean");
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        h.push_back("sigma_tilde" + std::to_string(i) + std::to_string(j));
  }
  h.emplace_back("error");
  return h;
}

std::string write_csv(const std::vector<ResultRow> &rows, TableKind kind,
                      const NumberFormat &fmt) {
  std::string out;
  const auto h = header(kind);
  for (std::size_t i = 0; i < h.size(); ++i)
    out += (i ? "," : "") + h[i];
  out += '\n';

  for (const auto &r : rows) {
    std::vector<std::string> cells;
    auto num = [&](const std::optional<double> &x) {
      cells.push_back(x ? format_number(*x, fmt) : "");
    };
    auto sym = [&](const std::optional<Sym6> &s) {
      for (int i = 0; i < 6; ++i)
        cells.push_back(s ? format_number((*s)[i], fmt) : "");
    };
    cells.push_back(r.id);
    num(r.v);
    num(r.j);
    num(r.y);
    num(r.z);
    num(r.zeta);
    cells.push_back(r.character);
    num(r.sqrt_y);
    sym(r.E);
    sym(r.D);
    if (kind == TableKind::Stress) {
      sym(r.tau);
      sym(r.sigma);
      num(r.mean);
      for (int i = 0; i < 9; ++i)
        cells.push_back(r.sigma_tilde ? format_number((*r.sigma_tilde)[i], fmt)
                                      : "");
    }
    cells.push_back(r.error);
    for (std::size_t i = 0; i < cells.size(); ++i)
      out += (i ? "," : "") + quote(cells[i]);
    out += '\n';
  }
  return out;
}

std::vector<ResultRow> read_csv(std::string_view text, TableKind kind) {
  const auto records = split_csv(text);
  const auto h = header(kind);
  if (records.empty() || records.front() != h)
    throw InvalidInput("CSV header does not match the expected columns");

  std::vector<ResultRow> rows;
  for (std::size_t line = 1; line < records.size(); ++line) {
    const auto &cells = records[line];
    if (cells.size() != h.size())
      throw InvalidInput("line " + std::to_string(line + 1) + ": expected " +
                         std::to_string(h.size()) + " cells, got " +
                         std::to_string(cells.size()));
    std::size_t c = 0;
    auto num = [&] {
      const std::size_t k = c++;
      return parse_number(cells[k], line + 1, h[k]);
    };
    auto sym = [&]() -> std::optional<Sym6> {
      Sym6 s{};
      int present = 0;
      for (int i = 0; i < 6; ++i) {
        auto x = num();
        if (x) {
          s[i] = *x;
          ++present;
        }
      }
      if (present == 0)
        return std::nullopt;
      if (present != 6)
        throw InvalidInput("line " + std::to_string(line + 1) +
                           ": partially empty tensor columns");
      return s;
    };
    ResultRow r;
    r.id = cells[c++];
    r.v = num();
    r.j = num();
    r.y = num();
    r.z = num();
    r.zeta = num();
    r.character = cells[c++];
    r.sqrt_y = num();
    r.E = sym();
    r.D = sym();
    if (kind == TableKind::Stress) {
      r.tau = sym();
      r.sigma = sym();
      r.mean = num();
      std::array<double, 9> flat{};
      int present = 0;
      for (int i = 0; i < 9; ++i) {
        auto x = num();
        if (x) {
          flat[i] = *x;
          ++present;
        }
      }
      if (present == 9)
        r.sigma_tilde = flat;
      else if (present != 0)
        throw InvalidInput("line " + std::to_string(line + 1) +
                           ": partially empty sigma_tilde columns");
    }
    r.error = cells[c++];
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string curve_csv(const StrainFamily &family, double lo, double hi,
                      int samples, const NumberFormat &fmt) {
  if (samples < 2)
    throw InvalidInput("curve needs at least 2 samples");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
    throw InvalidInput("curve range must satisfy lo < hi");
  std::string out = "x,f_tilde\n";
  for (int i = 0; i < samples; ++i) {
    const double x =
        i == samples - 1 ? hi : lo + (hi - lo) * i / (samples - 1);
    out += format_number(x, fmt) + "," +
           format_number(family.f_tilde()(x), fmt) + "\n";
  }
  return out;
}

} // namespace finstrain::batch
