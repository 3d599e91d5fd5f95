// Command-line driver: transport, replay, verification and small analyses.
//
// Exit codes: 0 success, 1 verification or assertion failure, 2 invalid input.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rca/analysis.hpp"
#include "rca/io.hpp"
#include "rca/sampling.hpp"
#include "rca/transporter.hpp"

namespace {

using nlohmann::json;
using namespace rca;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInvalid = 2;

std::string tuple_line(const std::vector<Config>& xs) {
  std::string out;
  for (const Config& x : xs) out += (out.empty() ? "" : " ") + emit_config(x);
  return out;
}

TupleK read_tuple(const std::string& path) {
  return TupleK::validate(parse_tuple_text(read_text_file(path)));
}

void print_sizes(const TransportWord& w) {
  std::cout << "length " << w.size();
  for (const auto& [tag, n] : size_report(w)) std::cout << " " << tag << "=" << n;
  std::cout << "\n";
}

int cmd_transport(const std::string& src_path, const std::string& dst_path,
                  const std::string& out_path) {
  const TupleK src = read_tuple(src_path);
  const TupleK dst = read_tuple(dst_path);
  const TransportWord w = transport(src, dst);
  if (!verify(w, src, dst)) {
    std::cerr << "transport word does not replay src to dst\n";
    return kFailed;
  }
  write_text_file(out_path, emit_word(w));
  print_sizes(w);
  return kOk;
}

int cmd_apply(const std::string& word_path, const std::string& tuple_path) {
  const TransportWord w = parse_word(read_text_file(word_path));
  const std::vector<Config> xs = parse_tuple_text(read_text_file(tuple_path));
  std::cout << emit_tuple_text(apply_word(xs, w));
  return kOk;
}

int cmd_verify(const std::string& word_path, const std::string& src_path,
               const std::string& dst_path) {
  const std::string text = read_text_file(word_path);
  const TransportWord w = parse_word(text);
  if (emit_word(w) != text) throw Error(Errc::Parse, "word file is not in canonical form");
  const bool ok = verify(w, read_tuple(src_path), read_tuple(dst_path));
  std::cout << (ok ? "ok" : "mismatch") << "\n";
  return ok ? kOk : kFailed;
}

json flags_json(const ClassFlags& f) {
  return {{"prepregood", f.prepregood}, {"pregood", f.pregood}, {"good", f.good},
          {"unihead", f.unihead},       {"great", f.great}};
}

int cmd_classify(const std::vector<std::string>& points, bool as_json) {
  json out = json::array();
  for (const std::string& text : points) {
    const Config x = parse_config(text);
    const ClassFlags f = classify(x);
    if (as_json) {
      json row = flags_json(f);
      row["config"] = emit_config(x);
      out.push_back(row);
    } else {
      std::cout << emit_config(x) << " prepregood=" << f.prepregood << " pregood=" << f.pregood
                << " good=" << f.good << " unihead=" << f.unihead << " great=" << f.great << "\n";
    }
  }
  if (as_json) std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_phi(const std::string& text, bool as_json) {
  const std::optional<ClockReading> r = phi_clock(parse_config(text));
  if (as_json) {
    std::cout << (r ? json{{"a", r->a}, {"t", r->t}} : json{{"clock_like", false}}).dump() << "\n";
  } else if (r) {
    std::cout << "a=" << r->a << " t=" << r->t << "\n";
  } else {
    std::cout << "not clock-like\n";
  }
  return kOk;
}

int cmd_kfinite(const std::string& cycles, bool brute, bool as_json) {
  std::vector<std::size_t> lengths;
  std::stringstream ss(cycles);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "bad cycle length '" + item + "'");
    }
    if (pos != item.size() || v <= 0) throw Error(Errc::Parse, "bad cycle length '" + item + "'");
    lengths.push_back(static_cast<std::size_t>(v));
  }
  const CycleSpec cs = CycleSpec::from_lengths(lengths);
  const KValue k = brute ? k_of_finite_bruteforce(cs) : k_of_finite(cs);
  if (as_json) {
    std::cout << json{{"cycles", lengths}, {"k", to_string(k)}}.dump() << "\n";
  } else {
    std::cout << to_string(k) << "\n";
  }
  return kOk;
}

int cmd_witness(const std::string& word_path, std::size_t support, std::size_t width) {
  const TransportWord w = parse_word(read_text_file(word_path));
  const WitnessResult r = find_nonshift_witness(w, support, width);
  if (const auto* wit = std::get_if<Witness>(&r)) {
    std::cout << "witness " << emit_config(wit->x) << " -> " << emit_config(wit->image) << "\n";
  } else if (const auto* s = std::get_if<IsShift>(&r)) {
    std::cout << "shift " << s->n << "\n";
  } else {
    std::cout << "inconclusive\n";
  }
  return kOk;
}

int cmd_demo_figure1() {
  const std::vector<Config> start = {parse_config("@0:3"), parse_config("@-1:201"),
                                     parse_config("@0:22")};
  const TransportWord steps = {Particle{3}, SymbolPerm{Perm4::transposition(kWall, kHead)},
                               Particle{2}};
  const std::vector<std::string> expected = {
      "@0:3 @-1:201 @0:22",
      "@-3:1002 @-2:12 @0:22",
      "@-3:1003 @-2:13 @0:33",
      "@-5:100102 @-4:1102 @-2:1122",
  };
  std::vector<Config> cur = start;
  bool ok = true;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) cur = apply_instruction(cur, steps[i - 1]);
    const std::string row = tuple_line(cur);
    const bool match = row == expected[i];
    std::cout << (i == 0 ? "start" : instruction_tag(steps[i - 1])) << "\t" << row
              << (match ? "" : "\t(expected " + expected[i] + ")") << "\n";
    ok = ok && match;
  }
  const TupleK x = TupleK::validate(start);
  const Stage good = make_good(x);
  ok = ok && good.word == steps;
  const Stage great = make_great(good.tuple);
  std::cout << "great\t" << tuple_line(great.tuple.components()) << "\n";
  for (const Config& y : great.tuple) ok = ok && classify(y).great;
  const Stage canon = make_canonical(great.tuple);
  std::cout << "canonical\t" << tuple_line(canon.tuple.components()) << "\n";
  ok = ok && canon.tuple == canonical_great(3);
  ok = ok && verify(transport(x, canonical_great(3)), x, canonical_great(3));
  std::cout << (ok ? "figure-1 replay ok" : "figure-1 replay FAILED") << "\n";
  return ok ? kOk : kFailed;
}

int cmd_selftest(std::uint64_t seed, std::size_t cases) {
  Rng rng(seed);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t k = 1 + i % 5;
    const TupleK src = random_tuple(rng, k, 12, 6);
    const TupleK dst = random_tuple(rng, k, 12, 6);
    const TransportWord w = transport(src, dst);
    if (!verify(w, src, dst) || !verify(invert_word(w), dst, src) ||
        parse_word(emit_word(w)) != w) {
      ++failures;
      std::cout << "FAIL " << tuple_line(src.components()) << " => "
                << tuple_line(dst.components()) << "\n";
    }
  }
  std::cout << cases - failures << "/" << cases << " transports verified (seed " << seed << ")\n";
  return failures == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transport words for automorphisms of the full shift on {0,1,2,3}"};
  app.require_subcommand(1);

  std::string src, dst, out, word, tuple, cycles, point;
  std::vector<std::string> points;
  bool as_json = false, brute = false;
  std::uint64_t seed = 1;
  std::size_t cases = 50, support = 3, width = 6;

  auto* transport_cmd = app.add_subcommand("transport", "Build and verify a transport word");
  transport_cmd->add_option("--src", src, "Source tuple file")->required();
  transport_cmd->add_option("--dst", dst, "Destination tuple file")->required();
  transport_cmd->add_option("-o,--out", out, "Output word file")->required();

  auto* apply_cmd = app.add_subcommand("apply", "Apply a word file to the points of a tuple file");
  apply_cmd->add_option("--word", word, "Word file")->required();
  apply_cmd->add_option("--tuple", tuple, "Tuple file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check that a word replays src to dst");
  verify_cmd->add_option("--word", word, "Word file")->required();
  verify_cmd->add_option("--src", src, "Source tuple file")->required();
  verify_cmd->add_option("--dst", dst, "Destination tuple file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Print the normal-form flags of points");
  classify_cmd->add_option("points", points, "Points as @offset:digits")->required();
  classify_cmd->add_flag("--json", as_json);

  auto* phi_cmd = app.add_subcommand("phi", "Clock reading of a point");
  phi_cmd->add_option("point", point, "Point as @offset:digits")->required();
  phi_cmd->add_flag("--json", as_json);

  auto* kfinite_cmd = app.add_subcommand("kfinite", "k(X) of a finite subshift");
  kfinite_cmd->add_option("--cycles", cycles, "Cycle lengths, e.g. 1,1,2")->required();
  kfinite_cmd->add_flag("--bruteforce", brute, "Enumerate the automorphism group instead");
  kfinite_cmd->add_flag("--json", as_json);

  auto* witness_cmd = app.add_subcommand("witness", "Search for a point the word moves off its orbit");
  witness_cmd->add_option("--word", word, "Word file")->required();
  witness_cmd->add_option("--support", support, "Maximum nonzero cells");
  witness_cmd->add_option("--width", width, "Maximum width");

  auto* demo_cmd = app.add_subcommand("demo-figure1", "Replay the three-point worked example");

  auto* selftest_cmd = app.add_subcommand("selftest", "Random transport round trips");
  selftest_cmd->add_option("--seed", seed, "Random seed");
  selftest_cmd->add_option("--cases", cases, "Number of random pairs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*transport_cmd) return cmd_transport(src, dst, out);
    if (*apply_cmd) return cmd_apply(word, tuple);
    if (*verify_cmd) return cmd_verify(word, src, dst);
    if (*classify_cmd) return cmd_classify(points, as_json);
    if (*phi_cmd) return cmd_phi(point, as_json);
    if (*kfinite_cmd) return cmd_kfinite(cycles, brute, as_json);
    if (*witness_cmd) return cmd_witness(word, support, width);
    if (*demo_cmd) return cmd_demo_figure1();
    if (*selftest_cmd) return cmd_selftest(seed, cases);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == Errc::InternalScheduleViolation ? kFailed : kInvalid;
  }
  return kInvalid;
}
