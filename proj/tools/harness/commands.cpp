#include "commands.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "generator.hpp"
#include "json.hpp"
#include "oracle.hpp"

namespace toricmld::harness {

using nlohmann::json;

namespace {

Instance load_input(const CommandOptions& opt) {
  if (!opt.instance.empty()) return load_instance(opt.instance);
  if (opt.seed) return generate_instance(*opt.seed);
  throw Error(ErrorCode::kParse, "no instance file given (pass a path or --seed)");
}

json int_json(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

// Runs body, turning library errors into exit codes.
int guarded(const CommandOptions& opt, std::ostream& out, std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    const int code = exit_code_for(e.code());
    if (opt.json) {
      out << json{{"error", e.what()}, {"kind", to_string(e.code())}}.dump() << "\n";
    }
    err << "error: " << e.what() << "\n";
    return code;
  }
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPositive:
    case ErrorCode::kUnbounded:
    case ErrorCode::kWidthBound:
    case ErrorCode::kLemmaViolation:
    case ErrorCode::kDescentFailed:
      return kNegative;
    default:
      return kInvalidInput;
  }
}

IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw Error(ErrorCode::kParse, "empty entry in integer list '" + text + "'");
    try {
      out.emplace_back(item.substr(first, last - first + 1));
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::kParse, "not an integer: '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kParse, "empty integer list");
  return out;
}

int cmd_check(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    const Instance inst = load_input(opt);
    const ToricContraction tc = inst.contraction();
    tc.validate();
    const GPair pair = inst.pair();
    validate_pair(tc.fan(), pair);
    const BoxData bd = box_square(tc, pair);
    if (opt.json) {
      out << json{{"valid", true}, {"glc", bd.glc}, {"l", bd.l}}.dump() << "\n";
    } else {
      out << "valid" << (bd.glc ? "" : " (not g-lc)") << "\n";
    }
    return int(kOk);
  });
}

int cmd_mld(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    const Instance inst = load_input(opt);
    const ToricContraction tc = inst.contraction();
    tc.validate();
    const BoxData bd = box_square(tc, inst.pair());
    const MldResult m = mld_over_fiber(tc, bd);
    if (opt.json) {
      json j{{"positive", m.positive}};
      if (m.positive) {
        j["mld"] = to_string(m.value);
        j["witness"] = int_json(m.witness);
      }
      out << j.dump() << "\n";
    } else {
      out << (m.positive ? to_string(m.value) : "not positive") << "\n";
    }
    return int(m.positive ? kOk : kNegative);
  });
}

int cmd_lc(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    const Instance inst = load_input(opt);
    const ToricContraction tc = inst.contraction();
    tc.validate();
    const BoxData bd = box_square(tc, inst.pair());
    if (opt.json) {
      out << json{{"glc", bd.glc}}.dump() << "\n";
    } else {
      out << (bd.glc ? "g-lc" : "not g-lc") << "\n";
    }
    return int(bd.glc ? kOk : kNegative);
  });
}

int cmd_lct(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    if (opt.phibar.empty()) throw Error(ErrorCode::kParse, "lct needs --phibar");
    const IntVector phibar = parse_int_list(opt.phibar);
    const Instance inst = load_input(opt);
    const ToricContraction tc = inst.contraction();
    tc.validate();
    if (phibar.size() != tc.base_rank()) throw Error(ErrorCode::kDimensionMismatch, "--phibar has wrong length");
    const BoxData bd = box_square(tc, inst.pair());
    const Rational v = lct_pullback(tc, bd, phibar);
    if (opt.json) {
      out << json{{"lct", to_string(v)}}.dump() << "\n";
    } else {
      out << to_string(v) << "\n";
    }
    return int(kOk);
  });
}

int cmd_find(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    const Instance inst = load_input(opt);
    const HyperplaneCertificate cert = find_hyperplane(inst.contraction(), inst.pair());
    const std::string text = serialize_certificate(cert);
    if (opt.out.empty()) {
      out << text;
      return int(kOk);
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::kParse, opt.out + ": cannot write file");
    file << text;
    if (opt.json) {
      out << json{{"phi_bar", int_json(cert.phi_bar)}, {"gamma", to_string(cert.gamma)}, {"certificate", opt.out}}.dump()
          << "\n";
    } else {
      out << "phi_bar " << to_string(cert.phi_bar) << " gamma " << to_string(cert.gamma) << " -> " << opt.out << "\n";
    }
    return int(kOk);
  });
}

int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    if (opt.certificate.empty()) throw Error(ErrorCode::kParse, "verify needs a certificate file");
    const Instance inst = load_input(opt);
    const HyperplaneCertificate cert = parse_certificate(read_file(opt.certificate), opt.certificate);
    const VerifyResult v = verify_certificate(inst.contraction(), inst.pair(), cert);
    if (opt.json) {
      out << json{{"ok", v.ok}, {"reasons", v.reasons}}.dump() << "\n";
    } else if (v.ok) {
      out << "ok\n";
    } else {
      out << "rejected\n";
      for (const auto& r : v.reasons) out << "  " << r << "\n";
    }
    return int(v.ok ? kOk : kNegative);
  });
}

int cmd_oracle_mld(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    if (opt.box < 1) throw Error(ErrorCode::kParse, "oracle-mld needs --box R with R >= 1");
    const Instance inst = load_input(opt);
    const ToricContraction tc = inst.contraction();
    tc.validate();
    const GPair pair = inst.pair();
    const OracleResult o = oracle_mld(tc, pair, opt.box);
    const MldResult m = mld_over_fiber(tc, box_square(tc, pair));
    const bool agree = o.found && m.positive && o.value == m.value;
    if (opt.json) {
      json j{{"found", o.found}, {"box", opt.box}, {"candidates", o.candidates}, {"agrees", agree}};
      if (o.found) {
        j["mld"] = to_string(o.value);
        j["point"] = int_json(o.point);
      }
      out << j.dump() << "\n";
    } else if (o.found) {
      out << to_string(o.value) << " at " << to_string(o.point) << "\n";
      out << "box " << opt.box << ", " << o.candidates << " candidates; mld algorithm "
          << (agree ? "agrees" : "disagrees (radius may be too small)") << "\n";
    } else {
      out << "no candidate in box " << opt.box << "\n";
    }
    return int(o.found ? kOk : kNegative);
  });
}

int cmd_gamma(const CommandOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(opt, out, err, [&] {
    if (opt.dim < 1 || opt.dim > 16) throw Error(ErrorCode::kParse, "gamma needs --dim d with 1 <= d <= 16");
    if (opt.mld.empty()) throw Error(ErrorCode::kParse, "gamma needs --mld a");
    const Rational a = parse_rational(opt.mld);
    const Rational rec = gamma(opt.dim, a);
    const Rational closed = gamma_closed_form(opt.dim, a);
    if (opt.json) {
      out << json{{"gamma", to_string(rec)}, {"closed_form", to_string(closed)}, {"agree", rec == closed}}.dump()
          << "\n";
    } else {
      out << to_string(rec) << "\n";
      out << "recursion " << to_string(rec) << ", closed form " << to_string(closed) << ", "
          << (rec == closed ? "agree" : "DISAGREE") << "\n";
    }
    return int(rec == closed ? kOk : kNegative);
  });
}

}  // namespace toricmld::harness
