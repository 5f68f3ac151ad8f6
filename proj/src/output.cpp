#include "cavjj/output.hpp"

#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "cavjj/errors.hpp"

namespace cavjj {

namespace fs = std::filesystem;

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

Meta echo(const ReducedParams& rp) {
  Meta m;
  m["r_b"] = rp.r_b;
  m["r_c"] = rp.r_c;
  m["r_bc"] = rp.r_bc;
  m["lambda"] = rp.lambda;
  m["a_tilde"] = rp.a_tilde();
  m["a"] = rp.a_pump;
  m["b"] = rp.b_detune;
  m["c"] = rp.c_loss;
  m["d"] = rp.d_mirror;
  m["e"] = rp.e_mirror_detune;
  m["tilt_scale"] = rp.tilt_scale;
  return m;
}

Meta echo(const PhysicalParams& p) {
  Meta m;
  m["omega"] = p.omega;
  m["v"] = p.v_intra;
  m["v_prime"] = p.v_inter;
  m["s"] = p.s_pair;
  m["n"] = p.n_atoms;
  m["u0"] = p.light_shift();
  m["kappa"] = p.kappa;
  m["eta"] = p.eta;
  m["omega_c"] = p.omega_c;
  m["omega_p"] = p.omega_p;
  m["omega_m"] = p.omega_m;
  m["g0_mirror"] = p.g0_mirror;
  m["j1"] = p.j1;
  m["j2"] = p.j2;
  m["j1p"] = p.j1p;
  m["j2p"] = p.j2p;
  return m;
}

void ensure_dir(const fs::path& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw UsageError("cannot create output directory '" + dir.string() + "'");
}

namespace {

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  ensure_dir(path.parent_path());
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) throw UsageError("cannot write '" + path.string() + "'");
  return out;
}

void flatten(const Meta& m, const std::string& prefix, std::ofstream& out) {
  for (auto it = m.begin(); it != m.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      flatten(*it, key, out);
    } else if (it->is_string()) {
      out << "# " << key << '=' << it->get<std::string>() << '\n';
    } else if (it->is_number_float()) {
      out << "# " << key << '=' << format_number(it->get<double>()) << '\n';
    } else {
      out << "# " << key << '=' << it->dump() << '\n';
    }
  }
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* n = std::get_if<long>(&c)) return std::to_string(*n);
  return std::get<std::string>(c);
}

Meta cell_json(const Cell& c) {
  return std::visit([](const auto& v) { return Meta(v); }, c);
}

fs::path with_ext(const fs::path& stem, const char* ext) {
  fs::path p = stem;
  p += ext;
  return p;
}

}  // namespace

void write_csv(const fs::path& path, const Table& table, const Meta& meta) {
  auto out = open_out(path);
  flatten(meta, "", out);
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell_text(row[i]);
    out << '\n';
  }
}

void write_json(const fs::path& path, const Meta& doc) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

std::vector<fs::path> write_table(const fs::path& stem, const Table& table, const Meta& meta, OutputFormat format) {
  if (format == OutputFormat::json) {
    Meta doc;
    doc["meta"] = meta;
    doc["columns"] = table.columns;
    Meta rows = Meta::array();
    for (const auto& row : table.rows) {
      Meta r = Meta::array();
      for (const auto& c : row) r.push_back(cell_json(c));
      rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    const auto p = with_ext(stem, ".json");
    write_json(p, doc);
    return {p};
  }
  const auto csv = with_ext(stem, ".csv");
  const auto side = with_ext(stem, ".json");
  write_csv(csv, table, meta);
  Meta doc = meta;
  doc["columns"] = table.columns;
  doc["row_count"] = table.rows.size();
  write_json(side, doc);
  return {csv, side};
}

std::vector<fs::path> write_field(const fs::path& stem, const ScalarField& field, const Meta& meta,
                                  OutputFormat format) {
  const auto& g = field.spec;
  Meta head = meta;
  head["quantity"] = to_string(field.quantity);
  head["nz"] = g.nz;
  head["nphi"] = g.nphi;
  head["z_range"] = {g.z_min, g.z_max};
  head["phi_range"] = {g.phi_min, g.phi_max};

  switch (format) {
    case OutputFormat::csv: {
      Table t{{"z", "phi", to_string(field.quantity)}, {}};
      t.rows.reserve(g.nz * g.nphi);
      for (std::size_t i = 0; i < g.nz; ++i) {
        for (std::size_t j = 0; j < g.nphi; ++j) t.add({g.z_at(i), g.phi_at(j), field.at(i, j)});
      }
      return write_table(stem, t, head, OutputFormat::csv);
    }
    case OutputFormat::json: {
      Meta doc;
      doc["meta"] = head;
      std::vector<double> zs(g.nz), phis(g.nphi);
      for (std::size_t i = 0; i < g.nz; ++i) zs[i] = g.z_at(i);
      for (std::size_t j = 0; j < g.nphi; ++j) phis[j] = g.phi_at(j);
      doc["z"] = zs;
      doc["phi"] = phis;
      Meta rows = Meta::array();
      for (std::size_t i = 0; i < g.nz; ++i) {
        rows.push_back(std::vector<double>(field.values.begin() + static_cast<std::ptrdiff_t>(i * g.nphi),
                                           field.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * g.nphi)));
      }
      doc["values"] = std::move(rows);
      const auto p = with_ext(stem, ".json");
      write_json(p, doc);
      return {p};
    }
    case OutputFormat::binary_matrix: {
      static_assert(std::endian::native == std::endian::little, "binary-matrix writer assumes a little-endian host");
      head["dtype"] = "float64-le";
      head["layout"] = "row-major, rows = z";
      const auto p = with_ext(stem, ".bin");
      auto out = open_out(p, std::ios::out | std::ios::binary);
      out << head.dump() << '\n';
      out.write(reinterpret_cast<const char*>(field.values.data()),
                static_cast<std::streamsize>(field.values.size() * sizeof(double)));
      if (!out) throw UsageError("cannot write '" + p.string() + "'");
      return {p};
    }
  }
  return {};
}

}  // namespace cavjj
