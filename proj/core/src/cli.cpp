#include "reinhardt/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reinhardt/classify.hpp"
#include "reinhardt/composition.hpp"
#include "reinhardt/construct.hpp"
#include "reinhardt/enumerate.hpp"
#include "reinhardt/geometry.hpp"
#include "reinhardt/number_theory.hpp"

namespace reinhardt::cli {

namespace {

using nlohmann::ordered_json;

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw CLI::ValidationError("--format", "must be one of text, json, csv");
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

// Reference values for the sporadic-construction table: n, factorization,
// forced r, known sporadic count E1(n), and the count C(n) this construction
// reaches. Rows with r <= 3 have C(n) = E1(n).
struct ConstructionTableRow {
  int n;
  const char* factorization;
  int r;
  std::int64_t e1;
  std::int64_t c;
};

constexpr ConstructionTableRow kConstructionTable[] = {
    {30, "2*3*5", 2, 3, 3},
    {42, "2*3*7", 2, 9, 9},
    {45, "3^2*5", 3, 144, 144},
    {60, "2^2*3*5", 4, 4392, 3492},
    {63, "3^2*7", 3, 1308, 1308},
    {66, "2*3*11", 2, 93, 93},
    {70, "2*5*7", 2, 27, 27},
    {75, "3*5^2", 5, 153660, 107400},
    {78, "2*3*13", 2, 315, 315},
    {84, "2^2*3*7", 4, 161028, 150444},
    {90, "2*3^2*5", 6, 5385768, 3371568},
    {99, "3^2*11", 3, 192324, 192324},
    {102, "2*3*17", 2, 3855, 3855},
    {110, "2*5*11", 2, 279, 279},
    {114, "2*3*19", 2, 13797, 13797},
    {117, "3^2*13", 3, 2587284, 2587284},
    {130, "2*5*13", 2, 945, 945},
    {140, "2^2*5*7", 4, 633528, 478548},
    {154, "2*7*11", 2, 837, 837},
    {170, "2*5*17", 2, 11565, 11565},
    {182, "2*7*13", 2, 2835, 2835},
    {190, "2*5*19", 2, 41391, 41391},
    {238, "2*7*17", 2, 34695, 34695},
    {286, "2*11*13", 2, 29295, 29295},
};

struct GlobalConfig {
  std::string cache_dir = "./.reinhardt-cache";
  std::string format_name = "text";
  std::uint64_t budget = EnumerationOptions{}.node_budget;
  int threads = 0;

  Format format() const { return parse_format(format_name); }
  EnumerationOptions enum_options() const { return {budget, threads}; }
};

Composition parse_cli_composition(const std::string& text) {
  return parse_composition(expand_run_length_notation(text));
}

ordered_json polygon_json(const Composition& c, const Classification& cls) {
  ordered_json j;
  j["composition"] = c.parts();
  j["kind"] = cls.is_periodic() ? "periodic" : "sporadic";
  j["periods"] = cls.periods;
  return j;
}

void print_enumeration(const EnumerationResult& result, Format format, std::ostream& out) {
  switch (format) {
    case Format::text: {
      out << "n=" << result.n << " E=" << result.counts.total
          << " E0=" << result.counts.periodic << " E1=" << result.counts.sporadic << "\n";
      for (const auto& [c, cls] : result.polygons) {
        out << format_composition(c) << " "
            << (cls.is_periodic() ? "periodic" : "sporadic");
        if (cls.is_periodic()) out << " periods=" << join_ints(cls.periods, ',');
        out << "\n";
      }
      break;
    }
    case Format::json: {
      ordered_json j;
      j["n"] = result.n;
      j["E"] = result.counts.total;
      j["E0"] = result.counts.periodic;
      j["E1"] = result.counts.sporadic;
      auto polys = ordered_json::array();
      for (const auto& [c, cls] : result.polygons) polys.push_back(polygon_json(c, cls));
      j["polygons"] = polys;
      auto strata = ordered_json::array();
      for (const auto& [m, s] : result.by_largest_part)
        strata.push_back(ordered_json{{"m", m}, {"E", s.total}, {"E1", s.sporadic}});
      j["by_largest_part"] = strata;
      out << j.dump() << "\n";
      break;
    }
    case Format::csv: {
      out << "composition,kind,periods\n";
      for (const auto& [c, cls] : result.polygons)
        out << csv_quote(format_composition(c)) << ","
            << (cls.is_periodic() ? "periodic" : "sporadic") << ","
            << join_ints(cls.periods, ';') << "\n";
      break;
    }
  }
}

int run_enumerate(int n, const GlobalConfig& config, std::ostream& out) {
  EnumerationResult result =
      enumerate_with_cache(n, config.cache_dir, config.enum_options());
  print_enumeration(result, config.format(), out);
  return 0;
}

int run_count(int n, const GlobalConfig& config, std::ostream& out, std::ostream& err) {
  EnumerationResult result =
      enumerate_with_cache(n, config.cache_dir, config.enum_options());
  mpz_class formula = periodic_count_formula(n);
  if (formula != result.counts.periodic) {
    err << "error: enumerated periodic count " << result.counts.periodic
        << " disagrees with closed-form value " << formula.get_str() << " for n=" << n
        << "\n";
    return 1;
  }
  switch (config.format()) {
    case Format::text:
      out << "n=" << n << " E=" << result.counts.total << " E0=" << result.counts.periodic
          << " E1=" << result.counts.sporadic << " E0_formula=" << formula.get_str()
          << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["n"] = n;
      j["E"] = result.counts.total;
      j["E0"] = result.counts.periodic;
      j["E1"] = result.counts.sporadic;
      if (formula.fits_slong_p())
        j["E0_formula"] = formula.get_si();
      else
        j["E0_formula"] = formula.get_str();
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "n,E,E0,E1,E0_formula\n"
          << n << "," << result.counts.total << "," << result.counts.periodic << ","
          << result.counts.sporadic << "," << formula.get_str() << "\n";
      break;
  }
  return 0;
}

int run_classify(const std::string& text, const GlobalConfig& config, std::ostream& out) {
  Composition c = parse_cli_composition(text);
  const bool reinhardt = is_reinhardt(c);
  Classification cls;
  if (reinhardt) cls = classify(c);
  switch (config.format()) {
    case Format::text:
      out << "composition=" << format_composition(c) << " n=" << c.n()
          << " reinhardt=" << (reinhardt ? "yes" : "no");
      if (reinhardt) {
        out << " kind=" << (cls.is_periodic() ? "periodic" : "sporadic");
        if (cls.is_periodic()) out << " periods=" << join_ints(cls.periods, ',');
      }
      out << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["composition"] = c.parts();
      j["n"] = c.n();
      j["reinhardt"] = reinhardt;
      if (reinhardt) {
        j["kind"] = cls.is_periodic() ? "periodic" : "sporadic";
        j["periods"] = cls.periods;
      }
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "composition,n,reinhardt,kind,periods\n"
          << csv_quote(format_composition(c)) << "," << c.n() << ","
          << (reinhardt ? "yes" : "no") << ","
          << (reinhardt ? (cls.is_periodic() ? "periodic" : "sporadic") : "") << ","
          << join_ints(cls.periods, ';') << "\n";
      break;
  }
  return 0;
}

int run_construct(int n, const SporadicConstructionOptions& opts, const GlobalConfig& config,
                  std::ostream& out) {
  ConstructionSurvey survey = construct_sporadic(n, opts);
  auto factorization_text = [&] {
    std::string s;
    for (size_t i = 0; i < survey.factorizations.size(); ++i) {
      auto [p, q, r] = survey.factorizations[i];
      if (i) s += ";";
      s += std::to_string(p) + "x" + std::to_string(q) + "x" + std::to_string(r);
    }
    return s;
  };
  switch (config.format()) {
    case Format::text:
      out << "n=" << n << " C=" << survey.sporadic.size() << " raw=" << survey.raw_count
          << " periodic_raw=" << survey.periodic_raw_count
          << " factorizations=" << factorization_text() << "\n";
      for (const Composition& c : survey.sporadic) out << format_composition(c) << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["n"] = n;
      j["C"] = survey.sporadic.size();
      j["raw_constructions"] = survey.raw_count;
      j["periodic_raw"] = survey.periodic_raw_count;
      auto f = ordered_json::array();
      for (auto [p, q, r] : survey.factorizations) f.push_back({p, q, r});
      j["factorizations"] = f;
      auto sp = ordered_json::array();
      for (const Composition& c : survey.sporadic) sp.push_back(c.parts());
      j["sporadic"] = sp;
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "composition\n";
      for (const Composition& c : survey.sporadic)
        out << csv_quote(format_composition(c)) << "\n";
      break;
  }
  return 0;
}

int run_decompose(const std::string& text, int p, int q, const GlobalConfig& config,
                  std::ostream& out) {
  Composition c = parse_cli_composition(text);
  SignVector v = composition_to_sign_vector(c);
  Decomposition d = decompose(v, p, q);
  TrivialDecompositionCheck sides = has_trivial_decomposition(v, p, q);
  auto coeff_array = [](const IntPolynomial& f) {
    auto arr = ordered_json::array();
    for (const mpz_class& coeff : f.coeffs()) arr.push_back(coeff.get_si());
    return arr;
  };
  switch (config.format()) {
    case Format::text:
      out << "n=" << c.n() << " p=" << p << " q=" << q
          << " trivial=" << (d.trivial ? "yes" : "no")
          << " p_side=" << (sides.p_side ? "yes" : "no")
          << " q_side=" << (sides.q_side ? "yes" : "no") << "\n";
      out << "f1 = " << d.f1.to_string() << "\n";
      out << "f2 = " << d.f2.to_string() << "\n";
      break;
    case Format::json: {
      ordered_json j;
      j["composition"] = c.parts();
      j["n"] = c.n();
      j["p"] = p;
      j["q"] = q;
      j["f1"] = coeff_array(d.f1);
      j["f1_text"] = d.f1.to_string();
      j["f2"] = coeff_array(d.f2);
      j["f2_text"] = d.f2.to_string();
      j["trivial"] = d.trivial;
      j["p_side"] = sides.p_side;
      j["q_side"] = sides.q_side;
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "n,p,q,trivial,p_side,q_side,f1,f2\n"
          << c.n() << "," << p << "," << q << "," << (d.trivial ? "yes" : "no") << ","
          << (sides.p_side ? "yes" : "no") << "," << (sides.q_side ? "yes" : "no") << ","
          << csv_quote(d.f1.to_string()) << "," << csv_quote(d.f2.to_string()) << "\n";
      break;
  }
  return 0;
}

int run_render(const std::string& text, const std::string& output,
               const std::string& layers, double stroke_width, int canvas,
               const GlobalConfig& config, std::ostream& out) {
  Composition c = parse_cli_composition(text);
  PolygonRealization rz = realize(c);
  RenderStyle style;
  style.show_polygon = style.show_chords = style.show_arcs = false;
  style.stroke_width = stroke_width;
  style.canvas_size = canvas;
  std::stringstream ss(layers);
  std::string layer;
  while (std::getline(ss, layer, ',')) {
    if (layer == "polygon")
      style.show_polygon = true;
    else if (layer == "chords")
      style.show_chords = true;
    else if (layer == "arcs")
      style.show_arcs = true;
    else
      throw std::invalid_argument("unknown layer '" + layer +
                                  "' (expected polygon, chords, arcs)");
  }
  std::string svg = render_svg(rz, style);
  std::ofstream file(output, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file " + output);
  file << svg;
  if (!file) throw std::runtime_error("short write to " + output);

  char residual[32];
  std::snprintf(residual, sizeof residual, "%.3g", rz.closure_residual);
  switch (config.format()) {
    case Format::text:
      out << "wrote " << output << " (n=" << c.n() << ", closure residual " << residual
          << ")\n";
      break;
    case Format::json: {
      ordered_json j;
      j["output"] = output;
      j["n"] = c.n();
      j["closure_residual"] = rz.closure_residual;
      out << j.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "output,n,closure_residual\n"
          << csv_quote(output) << "," << c.n() << "," << residual << "\n";
      break;
  }
  return 0;
}

int run_tables(int table, std::vector<int> rows, const GlobalConfig& config,
               std::ostream& out, std::ostream& err) {
  if (table != 1)
    throw std::invalid_argument("only --table 1 (construction counts) is available");
  if (rows.empty()) rows = {30, 42, 45, 63, 66, 70};

  bool all_match = true;
  struct Outcome {
    const ConstructionTableRow* ref;
    std::int64_t computed;
  };
  std::vector<Outcome> outcomes;
  for (int n : rows) {
    const ConstructionTableRow* ref = nullptr;
    for (const auto& row : kConstructionTable)
      if (row.n == n) ref = &row;
    if (ref == nullptr)
      throw std::invalid_argument("n=" + std::to_string(n) +
                                  " is not a row of the construction table");
    SporadicConstructionOptions opts;
    opts.threads = config.threads;
    ConstructionSurvey survey = construct_sporadic(n, opts);
    outcomes.push_back({ref, static_cast<std::int64_t>(survey.sporadic.size())});
    if (outcomes.back().computed != ref->c) all_match = false;
  }

  switch (config.format()) {
    case Format::text:
      out << "n factorization r E1 C match\n";
      for (const auto& o : outcomes)
        out << o.ref->n << " " << o.ref->factorization << " " << o.ref->r << " "
            << o.ref->e1 << " " << o.computed << " "
            << (o.computed == o.ref->c ? "yes" : "NO") << "\n";
      break;
    case Format::json: {
      auto arr = ordered_json::array();
      for (const auto& o : outcomes)
        arr.push_back(ordered_json{{"n", o.ref->n},
                                   {"factorization", o.ref->factorization},
                                   {"r", o.ref->r},
                                   {"E1", o.ref->e1},
                                   {"C", o.computed},
                                   {"match", o.computed == o.ref->c}});
      out << arr.dump() << "\n";
      break;
    }
    case Format::csv:
      out << "n,factorization,r,E1,C,match\n";
      for (const auto& o : outcomes)
        out << o.ref->n << "," << o.ref->factorization << "," << o.ref->r << ","
            << o.ref->e1 << "," << o.computed << ","
            << (o.computed == o.ref->c ? "yes" : "no") << "\n";
      break;
  }
  if (!all_match) {
    err << "error: computed construction counts disagree with the reference table\n";
    return 1;
  }
  return 0;
}

}  // namespace

std::string expand_run_length_notation(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  auto fail = [&]() -> std::invalid_argument {
    return std::invalid_argument("malformed composition notation: '" + std::string(text) +
                                 "'");
  };
  if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw fail();
  const size_t end = s.size() - 1;
  size_t i = 1;
  auto parse_int = [&](size_t& pos) {
    size_t j = pos;
    while (j < end && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == pos) throw fail();
    int value = 0;
    std::from_chars(s.data() + pos, s.data() + j, value);
    pos = j;
    return value;
  };

  std::vector<int> parts;
  while (i < end) {
    if (s[i] == '(') {
      ++i;
      std::vector<int> group;
      group.push_back(parse_int(i));
      while (i < end && s[i] == ',') {
        ++i;
        group.push_back(parse_int(i));
      }
      if (i >= end || s[i] != ')') throw fail();
      ++i;
      if (i >= end || s[i] != '^') throw fail();
      ++i;
      int repeat = parse_int(i);
      if (repeat < 1) throw fail();
      for (int k = 0; k < repeat; ++k) parts.insert(parts.end(), group.begin(), group.end());
    } else {
      parts.push_back(parse_int(i));
    }
    if (i < end) {
      if (s[i] != ',') throw fail();
      ++i;
      if (i == end) throw fail();
    }
  }
  if (parts.empty()) throw fail();

  std::string out = "[";
  out += join_ints(parts, ',');
  out += "]";
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  GlobalConfig config;

  CLI::App app{"Exact enumeration, construction and rendering of Reinhardt polygons"};
  app.name("reinhardt");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--cache-dir", config.cache_dir,
                 "Directory for enumeration cache files")
      ->envname("REINHARDT_CACHE_DIR")
      ->capture_default_str();
  app.add_option("--format", config.format_name, "Output format: text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--budget", config.budget, "Enumeration search-node budget")
      ->capture_default_str();
  app.add_option("--threads", config.threads,
                 "Worker threads (0 = hardware parallelism)")
      ->capture_default_str();

  int n_enumerate = 0, n_count = 0, n_construct = 0;
  std::string composition_text, output_file, layers = "polygon";
  int opt_p = 0, opt_q = 0, opt_r = 0;
  bool all_factorizations = false, require_zero_in_s = false;
  int largest_part = 0;
  double stroke_width = 1.5;
  int canvas = 600;
  int table_number = 1;
  std::vector<int> table_rows;
  std::string runlength_text;

  CLI::App* cmd_enumerate =
      app.add_subcommand("enumerate", "List all Reinhardt polygons with n sides");
  cmd_enumerate->add_option("n", n_enumerate, "Number of sides")->required();

  CLI::App* cmd_count =
      app.add_subcommand("count", "Counts E, E0, E1 with the closed-form cross-check");
  cmd_count->add_option("n", n_count, "Number of sides")->required();

  CLI::App* cmd_classify = app.add_subcommand(
      "classify", "Classify a composition: Reinhardt? periodic? with which periods?");
  cmd_classify->add_option("composition", composition_text, "e.g. [7,7,7] or [(7)^3]")
      ->required();

  CLI::App* cmd_construct =
      app.add_subcommand("construct", "Build sporadic Reinhardt polygons for n = p*q*r");
  cmd_construct->add_option("n", n_construct, "Number of sides (p*q*r)")->required();
  cmd_construct->add_option("--p", opt_p, "First odd prime (ordered choice)");
  cmd_construct->add_option("--q", opt_q, "Second odd prime (ordered choice)");
  cmd_construct->add_option("--r", opt_r, "Multiplier; must equal n/(p*q)");
  cmd_construct->add_flag("--all-factorizations", all_factorizations,
                          "Use every ordered (p,q) choice (default unless --p/--q given)");
  cmd_construct->add_flag("--require-zero-in-s", require_zero_in_s,
                          "Only subsets S containing 0");
  cmd_construct->add_option("--largest-part", largest_part,
                            "Keep only compositions with this largest part");

  CLI::App* cmd_decompose = app.add_subcommand(
      "decompose", "Decompose a Reinhardt composition for n = p*q over the two generators");
  cmd_decompose->add_option("composition", composition_text, "e.g. [3,1,1,3,1,1,3,1,1]")
      ->required();
  cmd_decompose->add_option("--p", opt_p, "First odd prime")->required();
  cmd_decompose->add_option("--q", opt_q, "Second odd prime")->required();

  CLI::App* cmd_render = app.add_subcommand("render", "Render a composition as SVG");
  cmd_render->add_option("composition", composition_text, "e.g. [(7)^3]")->required();
  cmd_render->add_option("-o,--output", output_file, "Output SVG file")->required();
  cmd_render->add_option("--layers", layers,
                         "Comma list of layers: polygon, chords, arcs");
  cmd_render->add_option("--stroke-width", stroke_width, "Stroke width in canvas units");
  cmd_render->add_option("--canvas", canvas, "Canvas size in pixels");

  CLI::App* cmd_tables = app.add_subcommand(
      "tables", "Recompute the sporadic-construction count table");
  cmd_tables->add_option("--table", table_number, "Table number (only 1)");
  cmd_tables->add_option("--rows", table_rows, "Rows (values of n) to recompute")
      ->delimiter(',');

  CLI::App* cmd_expand =
      app.add_subcommand("expand", "Expand run-length notation like [(3,1,1)^3]");
  cmd_expand->add_option("notation", runlength_text, "Composition notation")->required();

  std::vector<const char*> argv;
  argv.push_back("reinhardt");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    parse_format(config.format_name);

    if (cmd_enumerate->parsed()) return run_enumerate(n_enumerate, config, out);
    if (cmd_count->parsed()) return run_count(n_count, config, out, err);
    if (cmd_classify->parsed()) return run_classify(composition_text, config, out);
    if (cmd_construct->parsed()) {
      SporadicConstructionOptions opts;
      opts.threads = config.threads;
      if (require_zero_in_s) opts.subsets = SubsetPolicy::zero_containing;
      if (largest_part > 0) opts.largest_part = largest_part;
      if ((opt_p == 0) != (opt_q == 0))
        throw std::invalid_argument("--p and --q must be given together");
      if (opt_p != 0) {
        if (all_factorizations)
          throw std::invalid_argument("--all-factorizations conflicts with --p/--q");
        if (opt_r != 0 && static_cast<std::int64_t>(opt_p) * opt_q * opt_r != n_construct)
          throw std::invalid_argument("--r must equal n/(p*q)");
        opts.pq = std::make_pair(opt_p, opt_q);
      }
      return run_construct(n_construct, opts, config, out);
    }
    if (cmd_decompose->parsed())
      return run_decompose(composition_text, opt_p, opt_q, config, out);
    if (cmd_render->parsed())
      return run_render(composition_text, output_file, layers, stroke_width, canvas,
                        config, out);
    if (cmd_tables->parsed()) return run_tables(table_number, table_rows, config, out, err);
    if (cmd_expand->parsed()) {
      std::string expanded = expand_run_length_notation(runlength_text);
      if (config.format() == Format::json) {
        // plain integer list; expansion itself does not impose composition rules
        auto arr = ordered_json::array();
        std::stringstream body(expanded.substr(1, expanded.size() - 2));
        std::string token;
        while (std::getline(body, token, ',')) arr.push_back(std::stoi(token));
        ordered_json j;
        j["composition"] = arr;
        out << j.dump() << "\n";
      } else {
        out << expanded << "\n";
      }
      return 0;
    }
    err << "error: no subcommand\n";
    return 2;
  } catch (const budget_exhausted_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const cache_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace reinhardt::cli
