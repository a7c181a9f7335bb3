#include "histo/convergence.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include "histo/errors.hpp"
#include "histo/format.hpp"

namespace histo {

namespace fs = std::filesystem;

SchemeSpec SchemeSpec::parse(std::string_view text) {
  const auto t = trim(text);
  if (t == "ch" || t == "CH") return {Kind::classical};
  if (t == "tuned") return {Kind::tuned};
  if (t == "uniform") return {Kind::gegenbauer, 0.0, 0.0};
  const auto open = t.find('(');
  if (open == std::string_view::npos || t.back() != ')') {
    throw ConfigError("unknown scheme '" + std::string(t) + "'");
  }
  const auto head = trim(t.substr(0, open));
  const auto args = split_list(t.substr(open + 1, t.size() - open - 2), ',');
  SchemeSpec s;
  if (head == "jacobi" && args.size() == 2) {
    s = {Kind::jacobi, parse_double(args[0]), parse_double(args[1])};
  } else if (head == "gegenbauer" && args.size() == 1) {
    const double g = parse_double(args[0]);
    s = {Kind::gegenbauer, g, g};
  } else {
    throw ConfigError("unknown scheme '" + std::string(t) + "'");
  }
  if (!(s.alpha > -1.0) || !(s.beta > -1.0)) throw ConfigError("density parameters must exceed -1");
  return s;
}

std::string SchemeSpec::name() const {
  switch (kind) {
    case Kind::classical:
      return "CH";
    case Kind::jacobi:
      return "jacobi";
    case Kind::gegenbauer:
      return "gegenbauer";
    case Kind::tuned:
      return "tuned";
  }
  return "?";
}

namespace {

std::vector<int> parse_levels(std::string_view v) {
  std::vector<int> out;
  for (const auto& s : split_list(v)) out.push_back(parse_int(s));
  return out;
}

bool parse_switch(std::string_view v) {
  if (v == "on" || v == "true" || v == "1" || v == "yes") return true;
  if (v == "off" || v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("expected on/off, got '" + std::string(v) + "'");
}

std::string resolve(const std::string& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? p : (fs::path(base) / path).lexically_normal().string();
}

}  // namespace

RunConfig RunConfig::parse(std::istream& in, const std::string& base_dir) {
  RunConfig c;
  c.output_dir = base_dir;
  std::vector<std::string> function_ids;
  std::map<std::string, std::string> defines;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'key = value'", lineno);
    std::string key(trim(body.substr(0, eq)));
    const std::string value(trim(body.substr(eq + 1)));
    try {
      if (key.rfind("define ", 0) == 0) {
        const std::string name(trim(std::string_view(key).substr(7)));
        if (name.empty()) throw ConfigError("define needs a name");
        defines[name] = value;
      } else if (key == "functions") {
        function_ids = split_list(value);
      } else if (key == "levels") {
        c.levels = parse_levels(value);
      } else if (key == "schemes") {
        c.schemes.clear();
        // jacobi(a,b) contains a comma: split at top-level commas only.
        std::string cur;
        int depth = 0;
        for (char ch : value + ",") {
          if (ch == '(') ++depth;
          if (ch == ')') --depth;
          if (ch == ',' && depth == 0) {
            if (!trim(cur).empty()) c.schemes.push_back(SchemeSpec::parse(cur));
            cur.clear();
          } else {
            cur += ch;
          }
        }
      } else if (key == "norms") {
        c.norms.clear();
        for (const auto& s : split_list(value)) c.norms.push_back(parse_norm(s));
      } else if (key == "order") {
        c.order = parse_int(value);
      } else if (key == "edge_points") {
        c.edge_points = parse_int(value);
      } else if (key == "error_subdivision") {
        c.error_subdivision = parse_int(value);
      } else if (key == "tune_grid") {
        c.tune_grid = value == "default" ? CandidateGrid::default_grid()
                                         : CandidateGrid::from_csv_file(resolve(base_dir, value));
      } else if (key == "tune_levels") {
        c.tune_levels = parse_levels(value);
      } else if (key == "tune_norm") {
        c.tune_norm = parse_norm(value);
      } else if (key == "tune_tie_tolerance") {
        c.tune_tie_tolerance = parse_double(value);
      } else if (key == "domain") {
        const auto v = split_list(value);
        if (v.size() != 4) throw ConfigError("domain needs x0, x1, y0, y1");
        c.domain = {parse_double(v[0]), parse_double(v[1]), parse_double(v[2]), parse_double(v[3])};
      } else if (key == "output_dir") {
        c.output_dir = resolve(base_dir, value);
      } else if (key == "seed") {
        c.seed = static_cast<std::uint64_t>(parse_int(value));
      } else if (key == "timing") {
        c.timing = parse_switch(value);
      } else if (key == "threads") {
        c.threads = parse_int(value);
      } else {
        throw ConfigError("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  for (const auto& id : function_ids) {
    const auto it = defines.find(id);
    c.functions.push_back(it != defines.end() ? custom_function(id, it->second) : test_function(id));
  }
  c.validate();
  return c;
}

RunConfig RunConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  const auto base = fs::path(path).parent_path().string();
  return parse(in, base.empty() ? "." : base);
}

void RunConfig::validate() const {
  if (functions.empty()) throw ConfigError("no functions configured");
  if (levels.empty()) throw ConfigError("no mesh levels configured");
  if (schemes.empty()) throw ConfigError("no schemes configured");
  if (norms.empty()) throw ConfigError("no norms configured");
  for (int n : levels)
    if (n < 0) throw ConfigError("mesh levels must be non-negative");
  for (int n : tune_levels)
    if (n < 0) throw ConfigError("mesh levels must be non-negative");
  if (order < 2 || order > 5) throw ConfigError("order must lie in 2..5");
  if (edge_points < 1) throw ConfigError("edge_points must be positive");
  if (error_subdivision < 1) throw ConfigError("error_subdivision must be positive");
  if (!(tune_tie_tolerance >= 0.0)) throw ConfigError("tune_tie_tolerance must be non-negative");
  tune_grid.validate();
}

TuningReport tune_for_function(const TestFunction& f, const std::vector<std::shared_ptr<const Mesh>>& meshes,
                               const CandidateGrid& grid, const TuningSettings& settings) {
  ValidationSet set{{f}, meshes};
  return grid_search(grid, set, settings);
}

ErrorReport run_convergence(const RunConfig& config) {
  config.validate();
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  ErrorReport report;

  std::map<int, std::shared_ptr<const Mesh>> meshes;
  auto mesh_for = [&](int n) {
    auto it = meshes.find(n);
    if (it == meshes.end()) it = meshes.emplace(n, std::make_shared<const Mesh>(friedrichs_keller(n, config.domain))).first;
    return it->second;
  };

  SchemeOptions opts;
  opts.dofs.edge_points = config.edge_points;
  const TuningSettings tune_settings{config.tune_norm, config.error_subdivision, config.edge_points,
                                     config.tune_tie_tolerance};
  const bool needs_tuning = std::any_of(config.schemes.begin(), config.schemes.end(),
                                        [](const SchemeSpec& s) { return s.kind == SchemeSpec::Kind::tuned; });
  if (needs_tuning) {
    std::vector<std::shared_ptr<const Mesh>> validation;
    for (int n : config.tune_levels.empty() ? config.levels : config.tune_levels) validation.push_back(mesh_for(n));
    for (const auto& f : config.functions) {
      report.tuning.emplace(f.id, tune_for_function(f, validation, config.tune_grid, tune_settings));
    }
  }

  const auto classical = Scheme::classical(config.edge_points);
  for (const auto& f : config.functions) {
    std::vector<std::pair<SchemeSpec, std::shared_ptr<const Scheme>>> schemes;
    for (const auto& spec : config.schemes) {
      switch (spec.kind) {
        case SchemeSpec::Kind::classical:
          schemes.emplace_back(spec, classical);
          break;
        case SchemeSpec::Kind::jacobi:
          schemes.emplace_back(spec, Scheme::enriched(Density::jacobi(spec.alpha, spec.beta), config.order, opts));
          break;
        case SchemeSpec::Kind::gegenbauer:
          schemes.emplace_back(spec, Scheme::enriched(Density::gegenbauer(spec.alpha), config.order, opts));
          break;
        case SchemeSpec::Kind::tuned: {
          const JacobiPair best = report.tuning.at(f.id).best;
          SchemeSpec resolved = spec;
          resolved.alpha = best.alpha;
          resolved.beta = best.beta;
          schemes.emplace_back(resolved, Scheme::enriched(Density::jacobi(best.alpha, best.beta), 2, opts));
          break;
        }
      }
    }
    for (int n : config.levels) {
      const auto mesh = mesh_for(n);
      for (const auto& [spec, scheme] : schemes) {
        const auto t0 = clock::now();
        const Reconstruction recon = reconstruct_global(f.eval, mesh, scheme);
        const double build = std::chrono::duration<double>(clock::now() - t0).count();
        for (Norm norm : config.norms) {
          const auto t1 = clock::now();
          ErrorRow row;
          row.function = f.id;
          row.n = n;
          row.triangles = mesh->size();
          row.dofs = mesh->size() * scheme->dofs().size();
          row.scheme = spec.name();
          row.has_params = spec.kind != SchemeSpec::Kind::classical;
          row.alpha = spec.alpha;
          row.beta = spec.beta;
          row.norm = norm;
          row.error = lp_error(f.eval, recon, norm, config.error_subdivision);
          row.seconds = build + std::chrono::duration<double>(clock::now() - t1).count();
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  report.total_seconds = std::chrono::duration<double>(clock::now() - start).count();
  return report;
}

void write_results_csv(const ErrorReport& report, std::ostream& out, bool timing) {
  out << "function,n,triangles,scheme,alpha,beta,norm,error,seconds\n";
  for (const auto& r : report.rows) {
    out << r.function << ',' << r.n << ',' << r.triangles << ',' << r.scheme << ',';
    if (r.has_params) out << format_double(r.alpha) << ',' << format_double(r.beta);
    else out << ',';
    out << ',' << to_string(r.norm) << ',' << format_double(r.error) << ',';
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6f", r.seconds);
      out << buf;
    } else {
      out << 0;
    }
    out << '\n';
  }
}

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

std::string series_label(const ErrorRow& r) {
  if (!r.has_params) return r.scheme;
  return r.scheme + " (" + fmt("%g", r.alpha) + ", " + fmt("%g", r.beta) + ")";
}

}  // namespace

void write_svg(const ErrorReport& report, const std::string& function, Norm norm, std::ostream& out) {
  // Series in first-appearance order.
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  for (const auto& r : report.rows) {
    if (r.function != function || r.norm != norm) continue;
    const auto label = series_label(r);
    if (!series.count(label)) labels.push_back(label);
    series[label].emplace_back(static_cast<double>(r.triangles), r.error);
  }
  const double width = 640, height = 420, left = 80, right = 190, top = 40, bottom = 60;
  const double pw = width - left - right, ph = height - top - bottom;
  double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
  for (const auto& [_, pts] : series) {
    for (const auto& [x, y] : pts) {
      xmin = std::min(xmin, x);
      xmax = std::max(xmax, x);
      if (y > 0) {
        ymin = std::min(ymin, std::log10(y));
        ymax = std::max(ymax, std::log10(y));
      }
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (!std::isfinite(ymin)) ymin = -1, ymax = 0;
  const double ylo = std::floor(ymin), yhi = std::max(std::ceil(ymax), ylo + 1);
  auto sx = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
  auto sy = [&](double ly) { return top + (yhi - ly) / (yhi - ylo) * ph; };
  static const char* palette[] = {"#1f4eb4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << left + pw / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << function << ": "
      << to_string(norm) << " error</text>\n";
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double d = ylo; d <= yhi + 1e-9; d += 1.0) {
    const double y = sy(d);
    out << "<line x1=\"" << left << "\" x2=\"" << left + pw << "\" y1=\"" << fmt("%.2f", y) << "\" y2=\""
        << fmt("%.2f", y) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << left - 8 << "\" y=\"" << fmt("%.2f", y + 4) << "\" text-anchor=\"end\">1e"
        << static_cast<int>(d) << "</text>\n";
  }
  std::set<double> xticks;
  for (const auto& [_, pts] : series)
    for (const auto& p : pts) xticks.insert(p.first);
  for (double x : xticks) {
    out << "<text x=\"" << fmt("%.2f", sx(x)) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">"
        << static_cast<long long>(x) << "</text>\n";
  }
  out << "<text x=\"" << left + pw / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">triangles</text>\n";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const char* color = palette[i % 7];
    const auto& pts = series[labels[i]];
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : pts) {
      if (y > 0) out << fmt("%.2f", sx(x)) << ',' << fmt("%.2f", sy(std::log10(y))) << ' ';
    }
    out << "\"/>\n";
    for (const auto& [x, y] : pts) {
      if (y > 0)
        out << "<circle cx=\"" << fmt("%.2f", sx(x)) << "\" cy=\"" << fmt("%.2f", sy(std::log10(y)))
            << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = top + 10 + 20.0 * static_cast<double>(i);
    out << "<line x1=\"" << left + pw + 12 << "\" x2=\"" << left + pw + 36 << "\" y1=\"" << ly << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << left + pw + 42 << "\" y=\"" << ly + 4 << "\">" << labels[i] << "</text>\n";
  }
  out << "</svg>\n";
}

void write_summary(const ErrorReport& report, const RunConfig& config, std::ostream& out) {
  out << "histopolation convergence study\n";
  out << "edge_points = " << config.edge_points << ", error_subdivision = " << config.error_subdivision
      << ", seed = " << config.seed << "\n";
  for (const auto& [id, t] : report.tuning) {
    out << "tuned " << id << ": alpha* = " << format_double(t.best.alpha) << ", beta* = " << format_double(t.best.beta)
        << ", E_min = " << format_double(t.e_min) << " (" << t.table.size() << " candidates, "
        << to_string(t.settings.norm) << ")\n";
  }
  out << "\n";
  for (const auto& f : config.functions) {
    for (Norm norm : config.norms) {
      out << f.id << " [" << to_string(norm) << "]\n";
      std::string prev_scheme;
      std::map<std::string, double> prev_err;
      std::map<std::string, double> prev_h;
      for (const auto& r : report.rows) {
        if (r.function != f.id || r.norm != norm) continue;
        const auto label = series_label(r);
        const double h = 1.0 / (r.n + 1);
        out << "  n=" << r.n << " triangles=" << r.triangles << " dofs=" << r.dofs << "  " << label << "  "
            << fmt("%.6e", r.error);
        if (prev_err.count(label) && r.error > 0 && prev_err[label] > 0) {
          out << "  rate=" << fmt("%.3f", std::log(prev_err[label] / r.error) / std::log(prev_h[label] / h));
        }
        if (config.timing) out << "  " << fmt("%.4f", r.seconds) << "s";
        out << "\n";
        prev_err[label] = r.error;
        prev_h[label] = h;
      }
    }
  }
  if (config.timing) out << "\ntotal wall time: " << fmt("%.3f", report.total_seconds) << " s\n";
}

void write_outputs(const ErrorReport& report, const RunConfig& config) {
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create output directory '" + config.output_dir + "': " + ec.message());
  auto open = [&](const std::string& name) {
    const auto path = (fs::path(config.output_dir) / name).string();
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path + "'");
    return out;
  };
  {
    auto out = open("results.csv");
    write_results_csv(report, out, config.timing);
  }
  for (const auto& f : config.functions) {
    auto out = open(f.id + ".svg");
    write_svg(report, f.id, config.norms.front(), out);
  }
  {
    auto out = open("report.txt");
    write_summary(report, config, out);
  }
}

}  // namespace histo
