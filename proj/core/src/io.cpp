#include "polyunion/io.hpp"

#include <fstream>
#include <sstream>

#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_natural(std::string_view tok, const std::string& where) {
  const std::optional<Rat> r = parse_rat(tok);
  if (!r || r->get_den() != 1 || sgn(*r) < 0 || !r->get_num().fits_ulong_p())
    throw InputError(where + ": expected a natural number, got '" + std::string(tok) + "'");
  return r->get_num().get_ui();
}

QVec parse_row(std::string_view text, const std::string& where) {
  QVec row;
  for (std::string_view tok : split_ws(text)) {
    const std::optional<Rat> r = parse_rat(tok);
    if (!r) throw InputError(where + ": non-canonical rational '" + std::string(tok) + "'");
    row.push_back(*r);
  }
  return row;
}

std::string join(std::span<const Rat> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += to_string(v[i]);
  }
  return s;
}

std::size_t row_width(const PolyFile& f) { return f.kind == 'H' ? f.dim + 1 : f.dim; }

void check_shape(const PolyFile& f) {
  if (f.kind != 'H' && f.kind != 'V') throw InputError("polyfile: kind must be H or V");
  if (f.annotations.size() != f.rows.size()) throw InputError("polyfile: annotation count differs from row count");
  for (const QVec& r : f.rows)
    if (r.size() != row_width(f)) throw InputError("polyfile: row of wrong length");
}

}  // namespace

PolyFile parse_polyfile(std::string_view text) {
  PolyFile f;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    if (line.empty()) continue;
    if (!have_header) {
      const auto tok = split_ws(line);
      if (tok.size() != 3 || (tok[0] != "H" && tok[0] != "V"))
        throw InputError(where + ": expected header 'H <d> <m>' or 'V <d> <n>'");
      f.kind = tok[0][0];
      f.dim = parse_natural(tok[1], where);
      expected = parse_natural(tok[2], where);
      have_header = true;
      continue;
    }
    if (line.front() == '#') {
      f.directives.emplace_back(trim(line.substr(1)));
      continue;
    }
    const std::size_t hash = line.find('#');
    const std::string_view data = hash == std::string_view::npos ? line : line.substr(0, hash);
    const std::string_view note = hash == std::string_view::npos ? std::string_view{} : trim(line.substr(hash + 1));
    QVec row = parse_row(data, where);
    if (row.size() != row_width(f))
      throw InputError(where + ": expected " + std::to_string(row_width(f)) + " entries, got " +
                       std::to_string(row.size()));
    f.rows.push_back(std::move(row));
    f.annotations.emplace_back(note);
  }
  if (!have_header) throw InputError("polyfile: missing header");
  if (f.rows.size() != expected)
    throw InputError("polyfile: header announces " + std::to_string(expected) + " rows, found " +
                     std::to_string(f.rows.size()));
  return f;
}

std::string format_polyfile(const PolyFile& f) {
  check_shape(f);
  std::string out;
  out += f.kind;
  out += ' ' + std::to_string(f.dim) + ' ' + std::to_string(f.rows.size()) + '\n';
  for (const std::string& d : f.directives) out += '#' + d + '\n';
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    out += join(f.rows[i]);
    if (!f.annotations[i].empty()) out += " #" + f.annotations[i];
    out += '\n';
  }
  return out;
}

nlohmann::json polyfile_to_json(const PolyFile& f) {
  check_shape(f);
  nlohmann::json rows = nlohmann::json::array();
  for (const QVec& r : f.rows) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rat& x : r) row.push_back(to_string(x));
    rows.push_back(std::move(row));
  }
  return {{"kind", std::string(1, f.kind)},
          {"dim", f.dim},
          {"directives", f.directives},
          {"rows", std::move(rows)},
          {"annotations", f.annotations}};
}

PolyFile polyfile_from_json(const nlohmann::json& j) {
  try {
    PolyFile f;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind != "H" && kind != "V") throw InputError("polyfile json: kind must be H or V");
    f.kind = kind[0];
    f.dim = j.at("dim").get<std::size_t>();
    f.directives = j.value("directives", std::vector<std::string>{});
    for (const auto& row : j.at("rows")) {
      QVec r;
      for (const auto& x : row) r.push_back(parse_rat_or_throw(x.get<std::string>()));
      f.rows.push_back(std::move(r));
    }
    f.annotations = j.value("annotations", std::vector<std::string>(f.rows.size()));
    check_shape(f);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("polyfile json: ") + e.what());
  }
}

std::vector<std::string> find_directives(const PolyFile& file, std::string_view key) {
  std::vector<std::string> out;
  for (const std::string& d : file.directives) {
    if (d.compare(0, key.size(), key) != 0) continue;
    if (d.size() == key.size()) out.emplace_back();
    else if (d[key.size()] == ' ') out.emplace_back(trim(std::string_view(d).substr(key.size())));
  }
  return out;
}

std::optional<std::string> find_directive(const PolyFile& file, std::string_view key) {
  auto all = find_directives(file, key);
  if (all.empty()) return std::nullopt;
  return all.front();
}

PolyFile to_polyfile(const HRep& h) {
  h.validate();
  PolyFile f;
  f.kind = 'H';
  f.dim = h.dim;
  for (std::size_t i = 0; i < h.A.rows(); ++i) {
    QVec r = h.A.row_vec(i);
    r.push_back(h.b[i]);
    f.rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < h.E.rows(); ++i) {
    QVec r = h.E.row_vec(i);
    r.push_back(h.e[i]);
    f.rows.push_back(std::move(r));
  }
  if (h.E.rows() > 0) f.directives.push_back("equations " + std::to_string(h.E.rows()));
  f.annotations.assign(f.rows.size(), "");
  return f;
}

PolyFile to_polyfile(const VRep& v) {
  v.validate();
  PolyFile f;
  f.kind = 'V';
  f.dim = v.dim;
  f.rows = v.points;
  f.annotations.assign(f.rows.size(), "");
  return f;
}

HRep hrep_from(const PolyFile& f) {
  check_shape(f);
  if (f.kind != 'H') throw InputError("expected an H-representation");
  std::size_t k = 0;
  if (auto eq = find_directive(f, "equations")) k = parse_natural(*eq, "#equations");
  if (k > f.rows.size()) throw InputError("#equations exceeds the row count");
  HRep h;
  h.dim = f.dim;
  h.A = QMat(0, f.dim);
  h.E = QMat(0, f.dim);
  for (std::size_t i = 0; i < f.rows.size(); ++i) {
    const std::span<const Rat> a(f.rows[i].data(), f.dim);
    if (i + k < f.rows.size()) h.add_inequality(a, f.rows[i][f.dim]);
    else h.add_equation(a, f.rows[i][f.dim]);
  }
  return h;
}

VRep vrep_from(const PolyFile& f) {
  check_shape(f);
  if (f.kind != 'V') throw InputError("expected a V-representation");
  return VRep(f.dim, f.rows);
}

PolyFile to_polyfile(const ColoredHRep& c) {
  PolyFile f = to_polyfile(c.h);
  for (std::size_t i = 0; i < c.color.size(); ++i) f.annotations[i] = "color " + std::to_string(c.color[i]);
  return f;
}

ColoredHRep colored_from(const PolyFile& f) {
  ColoredHRep c;
  c.h = hrep_from(f);
  c.d = f.dim;
  for (std::size_t i = 0; i < c.h.A.rows(); ++i) {
    const auto tok = split_ws(f.annotations[i]);
    if (tok.size() != 2 || tok[0] != "color")
      throw InputError("row " + std::to_string(i + 1) + ": missing '#color j' annotation");
    const std::size_t j = parse_natural(tok[1], "row " + std::to_string(i + 1));
    if (j == 0) throw InputError("row " + std::to_string(i + 1) + ": colors start at 1");
    c.color.push_back(j);
  }
  return c;
}

PolyFile to_polyfile(const DisjunctiveEF& ef) {
  PolyFile f = to_polyfile(ef.h);
  const std::string d = std::to_string(ef.d);
  f.directives.insert(f.directives.begin(), "vars x:" + d + " x1:" + d + " lambda:1");
  return f;
}

PolyFile to_polyfile(const MipRep& rep) {
  PolyFile f = to_polyfile(rep.h);
  std::vector<std::string> head = {"vars x:" + std::to_string(rep.d) + " lambda:1", "integral lambda",
                                   "bigm1 " + join(rep.M1), "bigm2 " + join(rep.M2)};
  f.directives.insert(f.directives.begin(), head.begin(), head.end());
  return f;
}

void attach_perturbation(PolyFile& file, const PerturbationData& pert) {
  for (const QVec& b : pert.V_basis) file.directives.push_back("basis " + join(b));
  for (const QVec& u : pert.u) file.directives.push_back("u " + join(u));
  file.directives.push_back("nu " + join(pert.nu));
  file.directives.push_back("scale_exponent " + std::to_string(pert.scale_exponent));
}

PerturbationData perturbation_from(const PolyFile& file) {
  PerturbationData p;
  for (const std::string& s : find_directives(file, "basis")) p.V_basis.push_back(parse_row(s, "#basis"));
  for (const std::string& s : find_directives(file, "u")) p.u.push_back(parse_row(s, "#u"));
  if (auto nu = find_directive(file, "nu")) p.nu = parse_row(*nu, "#nu");
  if (auto e = find_directive(file, "scale_exponent"))
    p.scale_exponent = static_cast<int>(parse_natural(*e, "#scale_exponent"));
  if (p.u.size() != p.nu.size()) throw InputError("perturbation: #u and #nu disagree in length");
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace polyunion
