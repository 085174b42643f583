#include "freegrowth/golden.hpp"

#include <cstdlib>  // for getenv
#include <fstream>  // for ifstream
#include <sstream>  // for istringstream

#include "freegrowth/errors.hpp"

namespace freegrowth {

  std::size_t CsvTable::column(std::string const& name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) {
        return i;
      }
    }
    throw Error("CSV has no column \"" + name + "\"");
  }

  CsvTable read_csv(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path.string());
    }
    CsvTable    table;
    std::string line;
    bool        have_header = false;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') {
        line.pop_back();
      }
      if (line.empty() || line[0] == '#') {
        continue;
      }
      std::vector<std::string> fields;
      std::istringstream       ss(line);
      std::string              field;
      while (std::getline(ss, field, ',')) {
        fields.push_back(field);
      }
      if (!have_header) {
        table.header = std::move(fields);
        have_header  = true;
      } else if (fields.size() != table.header.size()) {
        throw Error(path.string() + ": row \"" + line + "\" has "
                    + std::to_string(fields.size()) + " fields, expected "
                    + std::to_string(table.header.size()));
      } else {
        table.rows.push_back(std::move(fields));
      }
    }
    if (!have_header) {
      throw Error(path.string() + " has no header row");
    }
    return table;
  }

  std::filesystem::path default_data_dir() {
    if (char const* env = std::getenv("FREEGROWTH_DATA_DIR");
        env != nullptr && *env != '\0') {
      return env;
    }
    return FREEGROWTH_DATA_DIR;
  }

  namespace {
    std::size_t to_size(std::string const& s) {
      std::size_t used = 0;
      auto const  v    = std::stoull(s, &used);
      if (used != s.size()) {
        throw Error("malformed integer \"" + s + "\"");
      }
      return v;
    }

    using Grid = std::map<std::pair<std::size_t, std::size_t>, BigInt>;

    Grid read_grid(std::filesystem::path const& path,
                   std::string const&           a,
                   std::string const&           b) {
      CsvTable const    t  = read_csv(path);
      std::size_t const ia = t.column(a), ib = t.column(b),
                        ic = t.column("count");
      Grid out;
      for (auto const& row : t.rows) {
        out[{to_size(row[ia]), to_size(row[ib])}] = BigInt(row[ic]);
      }
      return out;
    }

    // n -> coefficients indexed by power / base (1-based)
    std::map<std::size_t, std::vector<Rational>>
    read_coefficients(std::filesystem::path const& path, std::string const& key) {
      CsvTable const    t  = read_csv(path);
      std::size_t const in = t.column("n"), ik = t.column(key),
                        ic = t.column("coefficient");
      std::map<std::size_t, std::vector<Rational>> out;
      for (auto const& row : t.rows) {
        std::size_t const n = to_size(row[in]), j = to_size(row[ik]);
        if (j == 0) {
          throw Error(path.string() + ": index 0 is not allowed");
        }
        auto& coeffs = out[n];
        if (coeffs.size() < j) {
          coeffs.resize(j, Rational(0));
        }
        coeffs[j - 1] = parse_rational(row[ic]);
      }
      return out;
    }
  }  // namespace

  GoldenData load_golden(std::filesystem::path const& dir) {
    GoldenData g;
    g.subsemigroups = read_grid(dir / "appendix_a.csv", "r", "n");
    g.ideals        = read_grid(dir / "appendix_b.csv", "r", "n");
    g.congruences   = read_grid(dir / "appendix_c.csv", "r", "n");
    g.tables        = read_grid(dir / "table_1.csv", "n", "k");
    for (auto& [n, c] :
         read_coefficients(dir / "appendix_a_polynomials.csv", "power")) {
      g.subsemigroup_polynomials.emplace(n, GrowthPolynomial(std::move(c)));
    }
    for (auto& [n, c] :
         read_coefficients(dir / "appendix_b_polynomials.csv", "power")) {
      g.ideal_polynomials.emplace(n, GrowthPolynomial(std::move(c)));
    }
    for (auto& [n, c] :
         read_coefficients(dir / "appendix_c_exponential.csv", "base")) {
      g.congruence_forms.emplace(n, ExponentialForm(std::move(c)));
    }
    CsvTable const d = read_csv(dir / "appendix_d.csv");
    for (auto const& row : d.rows) {
      g.central_binomial.push_back({to_size(row[d.column("n")]),
                                    BigInt(row[d.column("a_I")]),
                                    BigInt(row[d.column("central_binomial")]),
                                    BigInt(row[d.column("difference")])});
    }
    return g;
  }

}  // namespace freegrowth
