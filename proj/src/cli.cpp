#include "sheafwc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sheafwc/divisors.hpp"
#include "sheafwc/errors.hpp"
#include "sheafwc/ktheory.hpp"

namespace sheafwc::cli {

using json = nlohmann::ordered_json;
using divisors::DivisorAL;

namespace {

json divisor_json(const DivisorAL& d) { return json{{"a", d.a.str()}, {"l", d.l.str()}}; }

json poly_json(const QPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

std::string chern_arg(const ChernP2& v) {
  return std::to_string(v.r()) + "," + std::to_string(v.c()) + "," + v.e().str();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

int to_int(const std::string& s) {
  const long v = Rational::parse(s).to_long();
  if (v < -1000000 || v > 1000000) throw DomainError("integer parameter out of range: " + s);
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// ---------------------------------------------------------------- subcommands

void cmd_walls(long d, bool as_json, const std::string& svg_path, std::ostream& out) {
  const auto candidates = walls::enumerate_potential_walls(d);
  const auto& actual = walls::m6_actual_walls();

  struct Row {
    std::string label;
    const walls::PotentialWall* wall;
    std::optional<DivisorAL> divisor;
  };
  std::vector<Row> rows;
  for (const auto& pw : candidates) {
    Row row{"", &pw, std::nullopt};
    if (d == 6) {
      const auto it = std::find_if(actual.begin(), actual.end(),
                                   [&](const walls::ActualWall& a) { return a.destabilizer == pw.destabilizer; });
      if (it != actual.end()) {
        row.label = it->label;
        row.divisor = divisors::wall_divisor(d, pw.destabilizer);
      }
    }
    rows.push_back(std::move(row));
  }

  if (!svg_path.empty()) {
    std::vector<walls::Wall> ws;
    std::vector<std::string> labels;
    for (const auto& r : rows) {
      ws.push_back(r.wall->wall);
      labels.push_back(r.label);
    }
    render_svg(ws, svg_path, labels);
  }

  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back(json{{"label", r.label.empty() ? json(nullptr) : json(r.label)},
                         {"center", r.wall->wall.center().str()},
                         {"radius_sq", r.wall->wall.radius_sq().str()},
                         {"destabilizer", chern_arg(r.wall->destabilizer)},
                         {"actual", r.divisor.has_value()},
                         {"divisor", r.divisor ? divisor_json(*r.divisor) : json(nullptr)}});
    }
    out << json{{"degree", d}, {"moduli_class", chern_arg(ktheory::moduli(d))}, {"walls", arr}}.dump(2) << "\n";
    return;
  }
  out << "walls of M_" << d << ", ch = " << ktheory::moduli(d).str() << "\n";
  out << std::left << std::setw(6) << "wall" << std::setw(10) << "center" << std::setw(12) << "radius_sq"
      << std::setw(14) << "destabilizer" << std::setw(11) << "status"
      << "divisor\n";
  for (const auto& r : rows) {
    out << std::left << std::setw(6) << (r.label.empty() ? "-" : r.label) << std::setw(10)
        << r.wall->wall.center().str() << std::setw(12) << r.wall->wall.radius_sq().str() << std::setw(14)
        << r.wall->destabilizer.str() << std::setw(11) << (r.divisor ? "actual" : "potential")
        << (r.divisor ? r.divisor->str() : "") << "\n";
  }
}

void print_pair(const std::pair<DivisorAL, DivisorAL>& gens, bool as_json, std::ostream& out) {
  if (as_json) {
    out << json{{"generators", json::array({divisor_json(gens.first), divisor_json(gens.second)})}}.dump(2) << "\n";
  } else {
    out << gens.first.str() << ", " << gens.second.str() << "\n";
  }
}

void cmd_betti(const std::string& space, bool as_json, const std::string& at, std::ostream& out) {
  const QPoly poly = space == "M6" ? betti::assemble_m6() : betti::space_poincare(parse_space(space));
  const Rational euler = poly.eval(Rational(1));
  std::optional<Rational> value;
  if (!at.empty()) value = poly.eval(Rational::parse(at));
  if (as_json) {
    json j{{"space", space}, {"coefficients", poly_json(poly)}, {"degree", poly.degree()}, {"euler", euler.str()}};
    if (value) j["at"] = json{{"q", Rational::parse(at).str()}, {"value", value->str()}};
    out << j.dump(2) << "\n";
    return;
  }
  out << "P(" << space << ") = " << poly.str() << "\n";
  out << "degree: " << poly.degree() << "\n";
  out << "euler: " << euler.str() << "\n";
  if (value) out << "P(" << Rational::parse(at).str() << ") = " << value->str() << "\n";
}

}  // namespace

betti::SpaceDescriptor parse_space(const std::string& text) {
  using S = betti::SpaceDescriptor;
  if (text == "N6") return S::kronecker(3, 5, 4);
  if (text == "Q6") return betti::q6_descriptor();
  const auto parts = split(text, ':');
  if (parts.empty()) throw DomainError("empty space specification");
  const auto& head = parts[0];
  if (head == "hilb" && parts.size() == 2) return S::hilb(to_int(parts[1]));
  if (head == "hilb" && parts.size() == 3) return S::hilb_model(to_int(parts[1]), to_int(parts[2]));
  if (head == "kronecker" && parts.size() == 4)
    return S::kronecker(to_int(parts[1]), to_int(parts[2]), to_int(parts[3]));
  if (head == "gr" && parts.size() == 3) return S::grassmannian(to_int(parts[1]), to_int(parts[2]));
  if (head == "proj" && parts.size() == 2) return S::projective(to_int(parts[1]));
  throw DomainError("unknown space '" + text + "'");
}

std::string svg_document(const std::vector<walls::Wall>& ws, const std::vector<std::string>& labels) {
  if (ws.empty()) throw DomainError("no walls to render");
  constexpr double kWidth = 800.0;
  constexpr double kMargin = 20.0;
  double xmin = 0, xmax = 0, rmax = 0;
  bool first = true;
  for (const auto& w : ws) {
    const double c = w.center().to_double();
    const double r = std::sqrt(w.radius_sq().to_double());
    xmin = first ? c - r : std::min(xmin, c - r);
    xmax = first ? c + r : std::max(xmax, c + r);
    rmax = std::max(rmax, r);
    first = false;
  }
  const double scale = (kWidth - 2 * kMargin) / (xmax - xmin);
  const double height = rmax * scale + 2 * kMargin;
  const double base = height - kMargin;
  auto sx = [&](double x) { return (x - xmin) * scale + kMargin; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth) << "\" height=\"" << fmt(height)
     << "\" viewBox=\"0 0 " << fmt(kWidth) << " " << fmt(height) << "\">\n";
  os << "  <line x1=\"0.0000\" y1=\"" << fmt(base) << "\" x2=\"" << fmt(kWidth) << "\" y2=\"" << fmt(base)
     << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const double c = ws[i].center().to_double();
    const double r = std::sqrt(ws[i].radius_sq().to_double());
    os << "  <path d=\"M " << fmt(sx(c - r)) << " " << fmt(base) << " A " << fmt(r * scale) << " " << fmt(r * scale)
       << " 0 0 1 " << fmt(sx(c + r)) << " " << fmt(base) << "\" fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\">"
       << "<title>center " << ws[i].center().str() << ", radius^2 " << ws[i].radius_sq().str() << "</title></path>\n";
    if (i < labels.size() && !labels[i].empty())
      os << "  <text x=\"" << fmt(sx(c)) << "\" y=\"" << fmt(base - r * scale - 3) << "\" font-size=\"10\""
         << " text-anchor=\"middle\">" << labels[i] << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

void render_svg(const std::vector<walls::Wall>& ws, const std::filesystem::path& path,
                const std::vector<std::string>& labels) {
  const std::string doc = svg_document(ws, labels);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << doc;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact wall-crossing, divisor and Betti-number computations for moduli of plane sheaves",
               "sheafwc"};
  app.require_subcommand(1);

  long degree = 0;
  bool as_json = false;
  std::string svg, destab, family, w_arg, v_arg, space, at;

  auto* walls_cmd = app.add_subcommand("walls", "Potential and actual Bridgeland walls of M_d");
  walls_cmd->add_option("--degree", degree, "Degree d")->required();
  walls_cmd->add_flag("--json", as_json);
  walls_cmd->add_option("--svg", svg, "Write an SVG picture of the walls");

  auto* nef_cmd = app.add_subcommand("nef", "Extremal rays of the nef cone of M_d");
  nef_cmd->add_option("--degree", degree)->required();
  nef_cmd->add_flag("--json", as_json);

  auto* eff_cmd = app.add_subcommand("effective", "Extremal rays of the effective cone of M_d");
  eff_cmd->add_option("--degree", degree)->required();
  eff_cmd->add_flag("--json", as_json);

  auto* div_cmd = app.add_subcommand("divisor", "Divisor attached to the wall of a destabilizing class");
  div_cmd->add_option("--degree", degree)->required();
  div_cmd->add_option("--destabilizer", destab, "Chern character r,c,e")->required();
  div_cmd->add_flag("--json", as_json);

  auto* int_cmd = app.add_subcommand("intersect", "Degree of lambda(w) on a test family, by GRR");
  int_cmd->add_option("--family", family)->required()->check(
      CLI::IsMember({"pencil", "jacobian", "evenwall", "oddwall"}));
  int_cmd->add_option("--degree", degree)->required();
  int_cmd->add_option("--w", w_arg, "Chern character r,c,e")->required();
  int_cmd->add_flag("--json", as_json);

  auto* euler_cmd = app.add_subcommand("euler", "Both Euler pairings of two classes");
  euler_cmd->add_option("--v", v_arg, "Chern character r,c,e")->required();
  euler_cmd->add_option("--w", w_arg, "Chern character r,c,e")->required();
  euler_cmd->add_flag("--json", as_json);

  auto* betti_cmd = app.add_subcommand("betti", "Poincare polynomial of a moduli space");
  betti_cmd->add_option("--space", space, "M6 | N6 | Q6 | hilb:n[:k] | kronecker:m:e:f | gr:k:n")->required();
  betti_cmd->add_flag("--json", as_json);
  betti_cmd->add_option("--at", at, "Also evaluate at this rational q");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*walls_cmd) {
      cmd_walls(degree, as_json, svg, out);
    } else if (*nef_cmd) {
      print_pair(divisors::nef_generators(degree), as_json, out);
    } else if (*eff_cmd) {
      print_pair(divisors::effective_generators(degree), as_json, out);
    } else if (*div_cmd) {
      const DivisorAL dv = divisors::wall_divisor(degree, ChernP2::parse(destab));
      if (as_json)
        out << divisor_json(dv).dump(2) << "\n";
      else
        out << dv.str() << "\n";
    } else if (*int_cmd) {
      const auto fam = divisors::family_class(divisors::parse_family(family), degree);
      const Rational deg = divisors::intersection_degree(fam, ChernP2::parse(w_arg));
      if (as_json)
        out << json{{"degree", deg.str()}}.dump(2) << "\n";
      else
        out << deg.str() << "\n";
    } else if (*euler_cmd) {
      const ChernP2 v = ChernP2::parse(v_arg);
      const ChernP2 w = ChernP2::parse(w_arg);
      const Rational prod = ktheory::euler_product(v, w);
      const Rational hom = ktheory::euler_hom(v, w);
      if (as_json)
        out << json{{"product", prod.str()}, {"hom", hom.str()}}.dump(2) << "\n";
      else
        out << "product: " << prod.str() << "\nhom: " << hom.str() << "\n";
    } else if (*betti_cmd) {
      cmd_betti(space, as_json, at, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace sheafwc::cli
