#include "histo/tuning.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "histo/errors.hpp"
#include "histo/format.hpp"
#include "histo/operators.hpp"

namespace histo {

CandidateGrid CandidateGrid::default_grid() {
  static constexpr double values[] = {-0.5, 0.0, 0.5, 1.0, 2.0, 3.0, 5.0};
  CandidateGrid g;
  for (double a : values)
    for (double b : values) g.pairs.push_back({a, b});
  return g;
}

CandidateGrid CandidateGrid::from_csv(std::istream& in) {
  CandidateGrid g;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    const auto fields = split_list(line, ',');
    if (fields.empty()) continue;
    if (fields.size() != 2) throw ParseError("expected 'alpha,beta'", lineno);
    if (g.pairs.empty() && fields[0] == "alpha" && fields[1] == "beta") continue;
    try {
      g.pairs.push_back({parse_double(fields[0]), parse_double(fields[1])});
    } catch (const ConfigError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  g.validate();
  return g;
}

CandidateGrid CandidateGrid::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open grid file '" + path + "'");
  return from_csv(in);
}

void CandidateGrid::validate() const {
  if (pairs.empty()) throw ConfigError("candidate grid is empty");
  for (const auto& p : pairs) {
    if (!(p.alpha > -1.0) || !(p.beta > -1.0)) throw ConfigError("candidate pair outside (-1, inf)^2");
  }
}

double total_error(const JacobiPair& pair, const ValidationSet& set, const TuningSettings& settings,
                   std::vector<double>* breakdown) {
  SchemeOptions opts;
  opts.dofs.edge_points = settings.edge_points;
  const auto scheme = Scheme::enriched(Density::jacobi(pair.alpha, pair.beta), 2, opts);
  if (breakdown) breakdown->clear();
  double total = 0.0;
  for (const auto& f : set.functions) {
    for (const auto& mesh : set.meshes) {
      const Reconstruction u = reconstruct_global(f.eval, mesh, scheme);
      const double e = lp_error(f.eval, u, settings.norm, settings.error_subdivision);
      if (breakdown) breakdown->push_back(e);
      total += e;
    }
  }
  return total;
}

std::size_t select_best(const std::vector<TuningRow>& table, double tie_tolerance) {
  if (table.empty()) throw ConfigError("candidate grid is empty");
  std::size_t best = 0;
  double e_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i].total < e_min - tie_tolerance) {
      e_min = table[i].total;
      best = i;
    }
  }
  return best;
}

namespace {

TuningReport make_report(std::vector<TuningRow> table, std::size_t best, const ValidationSet& set,
                         const TuningSettings& settings) {
  TuningReport r;
  r.best_index = best;
  r.best = table[best].pair;
  r.e_min = table[best].total;
  r.table = std::move(table);
  r.settings = settings;
  for (const auto& f : set.functions) r.function_ids.push_back(f.id);
  for (const auto& m : set.meshes) r.mesh_sizes.push_back(m->size());
  return r;
}

}  // namespace

TuningReport grid_search(const CandidateGrid& grid, const ValidationSet& set, const TuningSettings& settings) {
  grid.validate();
  std::vector<TuningRow> table(grid.pairs.size());
  const auto n = static_cast<std::ptrdiff_t>(grid.pairs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      auto& row = table[static_cast<std::size_t>(i)];
      row.pair = grid.pairs[static_cast<std::size_t>(i)];
      row.total = total_error(row.pair, set, settings, &row.breakdown);
    } catch (...) {
#pragma omp critical(histo_tuning_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  const std::size_t best = select_best(table, settings.tie_tolerance);
  return make_report(std::move(table), best, set, settings);
}

TuningReport reference::grid_search(const CandidateGrid& grid, const ValidationSet& set,
                                    const TuningSettings& settings) {
  grid.validate();
  std::vector<TuningRow> table;
  double e_min = std::numeric_limits<double>::infinity();
  std::size_t best = 0;
  for (const auto& pair : grid.pairs) {
    TuningRow row;
    row.pair = pair;
    row.total = total_error(pair, set, settings, &row.breakdown);
    if (row.total < e_min - settings.tie_tolerance) {
      e_min = row.total;
      best = table.size();
    }
    table.push_back(std::move(row));
  }
  return make_report(std::move(table), best, set, settings);
}

void write_tuning_csv(const TuningReport& report, std::ostream& out) {
  out << "alpha,beta,total";
  for (const auto& id : report.function_ids)
    for (std::size_t m : report.mesh_sizes) out << ',' << id << "_T" << m;
  out << ",best\n";
  for (std::size_t i = 0; i < report.table.size(); ++i) {
    const auto& row = report.table[i];
    out << format_double(row.pair.alpha) << ',' << format_double(row.pair.beta) << ','
        << format_double(row.total);
    for (double e : row.breakdown) out << ',' << format_double(e);
    out << ',' << (i == report.best_index ? 1 : 0) << '\n';
  }
}

}  // namespace histo
