#include "recten/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

#include "recten/error.hpp"

namespace recten {

using ojson = nlohmann::ordered_json;

std::string_view to_string(OutputFormat f) noexcept {
  switch (f) {
    case OutputFormat::text:
      return "text";
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::svg:
      return "svg";
  }
  return "unknown";
}

std::optional<OutputFormat> parse_format(std::string_view text) noexcept {
  for (OutputFormat f : {OutputFormat::text, OutputFormat::json, OutputFormat::csv, OutputFormat::svg})
    if (text == to_string(f)) return f;
  return std::nullopt;
}

namespace {

std::string braces(const IndexSubset& s) { return fmt::format("{{{}}}", fmt::join(s.members(), ",")); }

std::string quoted_set(const IndexSubset& s) { return fmt::format("\"{}\"", fmt::join(s.members(), " ")); }

[[noreturn]] void unsupported(std::string_view report, OutputFormat f) {
  throw DomainError(fmt::format("{} reports cannot be written as {}", report, to_string(f)));
}

std::string dump(const ojson& doc) { return doc.dump(2) + "\n"; }

ojson pair_json(const BoundPair& b, const char* lo, const char* hi) { return {{lo, b.lower}, {hi, b.upper}}; }

ojson bounds_json(const BoundsReport& r) {
  return {{"subset", r.subset.members()},
          {"complement", r.subset.complement().members()},
          {"yangQi", pair_json(r.yang_qi, "lower", "upper")},
          {"lu", pair_json(r.lu, "L", "U")},
          {"thetaPhi", pair_json(r.theta_phi, "Theta", "Phi")}};
}

std::string bounds_csv_row(const BoundsReport& r) {
  return fmt::format("{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g}", quoted_set(r.subset), r.yang_qi.lower,
                     r.yang_qi.upper, r.lu.lower, r.lu.upper, r.theta_phi.lower, r.theta_phi.upper);
}

constexpr std::string_view kBoundsCsvHeader = "subset,yangQiLower,yangQiUpper,L,U,Theta,Phi";

}  // namespace

std::string render_info(const RectangularTensor& a, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::string out = fmt::format("tensor p={} q={} m={} n={} order={} nnz={} nonnegative={}\n", a.p(), a.q(),
                                    a.m(), a.n(), a.order(), a.nnz(), a.is_nonnegative() ? "yes" : "no");
      out += "row sums:";
      for (int i = 1; i <= a.m(); ++i) out += fmt::format(" R{}={:.4f}", i, row_sum(a, i));
      out += "\ncol sums:";
      for (int j = 1; j <= a.n(); ++j) out += fmt::format(" C{}={:.4f}", j, col_sum(a, j));
      return out + "\n";
    }
    case OutputFormat::json:
      return dump({{"schemaVersion", kSchemaVersion},
                   {"report", "info"},
                   {"p", a.p()},
                   {"q", a.q()},
                   {"m", a.m()},
                   {"n", a.n()},
                   {"nnz", a.nnz()},
                   {"nonnegative", a.is_nonnegative()},
                   {"rowSums", a.row_sums()},
                   {"colSums", a.col_sums()}});
    case OutputFormat::csv: {
      std::string out = "kind,index,sum\n";
      for (int i = 1; i <= a.m(); ++i) out += fmt::format("row,{},{:.17g}\n", i, row_sum(a, i));
      for (int j = 1; j <= a.n(); ++j) out += fmt::format("col,{},{:.17g}\n", j, col_sum(a, j));
      return out;
    }
    default:
      unsupported("info", format);
  }
}

std::string render_bounds(const BoundsReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return fmt::format(
          "S={} Sbar={}\n"
          "YangQi lower={:.4f} upper={:.4f}\n"
          "L={:.4f} U={:.4f} Theta={:.4f} Phi={:.4f}\n",
          braces(r.subset), braces(r.subset.complement()), r.yang_qi.lower, r.yang_qi.upper, r.lu.lower, r.lu.upper,
          r.theta_phi.lower, r.theta_phi.upper);
    case OutputFormat::json: {
      ojson doc = {{"schemaVersion", kSchemaVersion}, {"report", "bounds"}};
      doc.update(bounds_json(r));
      return dump(doc);
    }
    case OutputFormat::csv:
      return fmt::format("{}\n{}\n", kBoundsCsvHeader, bounds_csv_row(r));
    default:
      unsupported("bounds", format);
  }
}

std::string render_inclusion(const DiskReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: {
      std::string out = fmt::format("method={} S={} Sbar={} disks={} unionRadius={:.4f}\n", to_string(r.method),
                                    braces(r.subset), braces(r.subset.complement()), r.disks.size(), r.union_radius);
      for (const Disk& d : r.disks)
        out += fmt::format("{} ({},{}) a={:.4f} b={:.4f} radius={:.4f}\n", to_string(d.family), d.i, d.j, d.a, d.b,
                           d.radius);
      return out;
    }
    case OutputFormat::json: {
      ojson disks = ojson::array();
      for (const Disk& d : r.disks)
        disks.push_back({{"family", to_string(d.family)}, {"i", d.i}, {"j", d.j}, {"a", d.a}, {"b", d.b},
                         {"radius", d.radius}});
      return dump({{"schemaVersion", kSchemaVersion},
                   {"report", "inclusion"},
                   {"method", to_string(r.method)},
                   {"subset", r.subset.members()},
                   {"complement", r.subset.complement().members()},
                   {"unionRadius", r.union_radius},
                   {"disks", std::move(disks)}});
    }
    case OutputFormat::csv: {
      std::string out = "family,i,j,a,b,radius\n";
      for (const Disk& d : r.disks)
        out += fmt::format("{},{},{},{:.17g},{:.17g},{:.17g}\n", to_string(d.family), d.i, d.j, d.a, d.b, d.radius);
      return out;
    }
    default:
      unsupported("inclusion", format);
  }
}

std::string render_pair(const SingularPair& pair, OutputFormat format) {
  switch (format) {
    case OutputFormat::text:
      return fmt::format(
          "lambda={:.4f} status={} residual={:.4e} iterations={} start={}\n"
          "bracket=[{:.4f}, {:.4f}]\n"
          "x=({:.4f})\n"
          "y=({:.4f})\n",
          pair.lambda, to_string(pair.status), pair.residual, pair.iterations, pair.start, pair.bracket_lower,
          pair.bracket_upper, fmt::join(pair.x, ", "), fmt::join(pair.y, ", "));
    case OutputFormat::json:
      return dump({{"schemaVersion", kSchemaVersion},
                   {"report", "lambda-max"},
                   {"lambda", pair.lambda},
                   {"status", to_string(pair.status)},
                   {"residual", pair.residual},
                   {"iterations", pair.iterations},
                   {"start", pair.start},
                   {"bracket", {pair.bracket_lower, pair.bracket_upper}},
                   {"x", pair.x},
                   {"y", pair.y}});
    case OutputFormat::csv:
      return fmt::format("lambda,status,residual,iterations,start\n{:.17g},{},{:.17g},{},{}\n", pair.lambda,
                         to_string(pair.status), pair.residual, pair.iterations, pair.start);
    default:
      unsupported("lambda-max", format);
  }
}

std::string render_verification(const InclusionCheck& check, OutputFormat format) {
  auto word = [](bool in) { return in ? "in" : "OUT"; };
  switch (format) {
    case OutputFormat::text: {
      std::string out = fmt::format("S={} psiRadius={:.4f} upsilonRadius={:.4f} tolerance={:.4e}\n",
                                    braces(check.subset), check.psi_radius, check.upsilon_radius, check.tolerance);
      for (const CandidateCheck& c : check.candidates)
        out += fmt::format("value={:.4f} psi={} upsilon={}{}\n", c.value, word(c.in_psi), word(c.in_upsilon),
                           c.violation ? " VIOLATION" : "");
      out += fmt::format("all inside: {}\n", check.all_inside() ? "yes" : "no");
      return out;
    }
    case OutputFormat::json: {
      ojson rows = ojson::array();
      for (const CandidateCheck& c : check.candidates)
        rows.push_back(
            {{"value", c.value}, {"inPsi", c.in_psi}, {"inUpsilon", c.in_upsilon}, {"violation", c.violation}});
      return dump({{"schemaVersion", kSchemaVersion},
                   {"report", "verify"},
                   {"subset", check.subset.members()},
                   {"psiRadius", check.psi_radius},
                   {"upsilonRadius", check.upsilon_radius},
                   {"tolerance", check.tolerance},
                   {"allInside", check.all_inside()},
                   {"candidates", std::move(rows)}});
    }
    case OutputFormat::csv: {
      std::string out = "value,inPsi,inUpsilon,violation\n";
      for (const CandidateCheck& c : check.candidates)
        out += fmt::format("{:.17g},{},{},{}\n", c.value, c.in_psi, c.in_upsilon, c.violation);
      return out;
    }
    default:
      unsupported("verify", format);
  }
}

std::string render_sweep(const SubsetSweep& sweep, OutputFormat format) {
  const BoundsReport& best = sweep.best();
  switch (format) {
    case OutputFormat::text: {
      std::string out = fmt::format("objective={} partitions={} best S={} Sbar={} value={:.4f}\n",
                                    to_string(sweep.objective), sweep.table.size(), braces(best.subset),
                                    braces(best.subset.complement()),
                                    objective_value(sweep.objective, best.theta_phi));
      out += render_bounds(best, OutputFormat::text);
      out += "partition table:\n";
      for (const BoundsReport& r : sweep.table)
        out += fmt::format("S={} L={:.4f} U={:.4f} Theta={:.4f} Phi={:.4f}\n", braces(r.subset), r.lu.lower,
                           r.lu.upper, r.theta_phi.lower, r.theta_phi.upper);
      return out;
    }
    case OutputFormat::json: {
      ojson table = ojson::array();
      for (const BoundsReport& r : sweep.table) table.push_back(bounds_json(r));
      return dump({{"schemaVersion", kSchemaVersion},
                   {"report", "sweep-s"},
                   {"objective", to_string(sweep.objective)},
                   {"bestIndex", sweep.best_index},
                   {"best", bounds_json(best)},
                   {"table", std::move(table)}});
    }
    case OutputFormat::csv: {
      std::string out = fmt::format("{},best\n", kBoundsCsvHeader);
      for (std::size_t k = 0; k < sweep.table.size(); ++k)
        out += fmt::format("{},{}\n", bounds_csv_row(sweep.table[k]), k == sweep.best_index);
      return out;
    }
    default:
      unsupported("sweep-s", format);
  }
}

std::string render_svg(const DiskReport& upsilon, const DiskReport& psi, std::span<const double> markers) {
  double reach = std::max(upsilon.union_radius, psi.union_radius);
  for (double v : markers) reach = std::max(reach, std::abs(v));
  if (!(reach > 0.0)) reach = 1.0;
  const double extent = 1.1 * reach;
  const double stroke = extent / 250.0;
  const double arm = extent / 40.0;
  const double font = extent / 18.0;

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
      "viewBox=\"{:.4f} {:.4f} {:.4f} {:.4f}\">\n",
      -extent, -extent, 2 * extent, 2 * extent);
  out += fmt::format("  <title>Singular value inclusion sets, S={}</title>\n", braces(psi.subset));
  out += fmt::format("  <rect x=\"{:.4f}\" y=\"{:.4f}\" width=\"{:.4f}\" height=\"{:.4f}\" fill=\"white\"/>\n", -extent,
                     -extent, 2 * extent, 2 * extent);
  out += fmt::format(
      "  <g stroke=\"#999999\" stroke-width=\"{:.4f}\">\n"
      "    <line x1=\"{:.4f}\" y1=\"0\" x2=\"{:.4f}\" y2=\"0\"/>\n"
      "    <line x1=\"0\" y1=\"{:.4f}\" x2=\"0\" y2=\"{:.4f}\"/>\n"
      "  </g>\n",
      stroke / 2, -extent, extent, -extent, extent);
  out += fmt::format(
      "  <circle id=\"upsilon\" cx=\"0\" cy=\"0\" r=\"{:.4f}\" fill=\"none\" stroke=\"black\" "
      "stroke-width=\"{:.4f}\"/>\n",
      upsilon.union_radius, stroke);
  out += fmt::format(
      "  <circle id=\"psi\" cx=\"0\" cy=\"0\" r=\"{:.4f}\" fill=\"none\" stroke=\"blue\" stroke-width=\"{:.4f}\" "
      "stroke-dasharray=\"{:.4f} {:.4f}\"/>\n",
      psi.union_radius, stroke, 4 * stroke, 3 * stroke);
  out += fmt::format("  <g id=\"singular-values\" stroke=\"red\" stroke-width=\"{:.4f}\">\n", stroke);
  for (double v : markers)
    out += fmt::format("    <path d=\"M {:.4f} 0 H {:.4f} M {:.4f} {:.4f} V {:.4f}\"/>\n", v - arm, v + arm, v, -arm,
                       arm);
  out += "  </g>\n";
  out += fmt::format(
      "  <g font-family=\"sans-serif\" font-size=\"{:.4f}\">\n"
      "    <text x=\"{:.4f}\" y=\"{:.4f}\" fill=\"black\">Upsilon |z| &lt;= {:.4f}</text>\n"
      "    <text x=\"{:.4f}\" y=\"{:.4f}\" fill=\"blue\">Psi |z| &lt;= {:.4f}</text>\n"
      "  </g>\n",
      font, -extent + font / 2, -extent + 1.5 * font, upsilon.union_radius, -extent + font / 2, -extent + 2.7 * font,
      psi.union_radius);
  out += "</svg>\n";
  return out;
}

}  // namespace recten
