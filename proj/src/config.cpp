#include "ntnsim/config.hpp"

#include <yaml-cpp/yaml.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "ntnsim/constants.hpp"

namespace ntnsim {

std::string_view scenario_kind_name(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::remote: return "remote";
    case ScenarioKind::post_disaster: return "post_disaster";
    case ScenarioKind::k_coverage: return "k_coverage";
    case ScenarioKind::custom: return "custom";
  }
  return "?";
}

RadioParams TierConfig::radio() const {
  RadioParams r;
  r.tx_power_dbw = tx_power_dbw;
  r.tx_gain_db = tx_gain_db;
  r.rx_gain_db = rx_gain_db;
  r.frequency_hz = frequency_hz;
  r.bandwidth_hz = bandwidth_hz;
  if (fading_kind == "nakagami") {
    r.fading = Nakagami{fading_m, fading_omega};
  } else if (fading_kind == "shadowed_rician") {
    r.fading = ShadowedRician{fading_b, fading_m, fading_omega};
  } else {
    r.fading = NoFading{};
  }
  return r;
}

namespace {

[[noreturn]] void fail(std::string_view key, const std::string& what) {
  throw ConfigError(std::string(key) + ": " + what);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_plain_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

// Accepts plain reals plus the forms pi, a*pi, pi/b and a*pi/b.
double parse_real(std::string_view key, const std::string& raw) {
  const std::string text = trim(raw);
  double v = 0.0;
  if (text == ".inf" || text == "+.inf") return std::numeric_limits<double>::infinity();
  if (text == "-.inf") return -std::numeric_limits<double>::infinity();
  if (parse_plain_double(text, v)) return v;
  const auto pos = text.find("pi");
  if (pos != std::string::npos) {
    double factor = 1.0;
    double divisor = 1.0;
    std::string head = trim(std::string_view(text).substr(0, pos));
    std::string tail = trim(std::string_view(text).substr(pos + 2));
    bool ok = true;
    if (head == "-") {
      factor = -1.0;
    } else if (!head.empty()) {
      ok = head.back() == '*' && parse_plain_double(trim(std::string_view(head).substr(0, head.size() - 1)), factor);
    }
    if (ok && !tail.empty()) {
      ok = tail.front() == '/' && parse_plain_double(trim(std::string_view(tail).substr(1)), divisor) && divisor != 0.0;
    }
    if (ok) return factor * kPi / divisor;
  }
  fail(key, "expected a number, got '" + raw + "'");
}

std::int64_t parse_int(std::string_view key, const std::string& raw) {
  const std::string text = trim(raw);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(key, "expected an integer, got '" + raw + "'");
  }
  return v;
}

std::uint64_t parse_uint(std::string_view key, const std::string& raw) {
  const std::string text = trim(raw);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(key, "expected a nonnegative integer, got '" + raw + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "true") return true;
  if (text == "false") return false;
  fail(key, "expected true or false, got '" + raw + "'");
}

std::string scalar_of(std::string_view key, const YAML::Node& node) {
  if (!node.IsScalar()) fail(key, "expected a scalar value");
  return node.Scalar();
}

// Sequence node, or a scalar holding a comma-separated list.
std::vector<std::string> items_of(std::string_view key, const YAML::Node& node) {
  std::vector<std::string> items;
  if (node.IsSequence()) {
    for (const auto& item : node) items.push_back(scalar_of(key, item));
  } else if (node.IsScalar()) {
    std::string s = node.Scalar();
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto comma = s.find(',', start);
      const std::string item = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos
                                                                                                 : comma - start));
      if (!item.empty()) items.push_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else if (!node.IsNull()) {
    fail(key, "expected a list");
  }
  return items;
}

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? ".inf" : "-.inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

YAML::Node plain(const std::string& text) { return YAML::Node(text); }

YAML::Node list_node(const std::vector<std::string>& items) {
  YAML::Node n(YAML::NodeType::Sequence);
  for (const auto& i : items) n.push_back(plain(i));
  n.SetStyle(YAML::EmitterStyle::Flow);
  return n;
}

struct Field {
  std::string key;
  std::string type;
  std::string doc;
  bool required = false;
  std::function<void(ScenarioConfig&, const YAML::Node&)> set;
  // Empty optional: key is unset and omitted from written configs.
  std::function<std::optional<YAML::Node>(const ScenarioConfig&)> get;
};

template <typename Member>
Field real_field(std::string key, std::string doc, Member member) {
  return Field{key, "real", std::move(doc), false,
               [member, key](ScenarioConfig& c, const YAML::Node& n) { member(c) = parse_real(key, scalar_of(key, n)); },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 return plain(format_real(member(const_cast<ScenarioConfig&>(c))));
               }};
}

template <typename Member>
Field int_field(std::string key, std::string doc, Member member, bool required = false) {
  return Field{key, "integer", std::move(doc), required,
               [member, key](ScenarioConfig& c, const YAML::Node& n) { member(c) = parse_int(key, scalar_of(key, n)); },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 return plain(std::to_string(member(const_cast<ScenarioConfig&>(c))));
               }};
}

template <typename Member>
Field bool_field(std::string key, std::string doc, Member member) {
  return Field{key, "bool", std::move(doc), false,
               [member, key](ScenarioConfig& c, const YAML::Node& n) { member(c) = parse_bool(key, scalar_of(key, n)); },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 return plain(member(const_cast<ScenarioConfig&>(c)) ? "true" : "false");
               }};
}

template <typename Member>
Field choice_field(std::string key, std::string doc, std::vector<std::string> choices, Member member) {
  std::string type = "one of";
  for (const auto& c : choices) type += " " + c;
  return Field{key, type, std::move(doc), false,
               [member, key, choices](ScenarioConfig& c, const YAML::Node& n) {
                 const std::string v = trim(scalar_of(key, n));
                 if (std::find(choices.begin(), choices.end(), v) == choices.end()) {
                   std::string msg = "unknown value '" + v + "', expected one of:";
                   for (const auto& ch : choices) msg += " " + ch;
                   fail(key, msg);
                 }
                 member(c) = v;
               },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 return plain(member(const_cast<ScenarioConfig&>(c)));
               }};
}

template <typename Member>
Field real_list_field(std::string key, std::string doc, Member member) {
  return Field{key, "list of reals", std::move(doc), false,
               [member, key](ScenarioConfig& c, const YAML::Node& n) {
                 std::vector<double> v;
                 for (const auto& s : items_of(key, n)) v.push_back(parse_real(key, s));
                 member(c) = v;
               },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 std::vector<std::string> items;
                 for (double v : member(const_cast<ScenarioConfig&>(c))) items.push_back(format_real(v));
                 return list_node(items);
               }};
}

template <typename Member>
Field int_list_field(std::string key, std::string doc, Member member) {
  return Field{key, "list of integers", std::move(doc), false,
               [member, key](ScenarioConfig& c, const YAML::Node& n) {
                 std::vector<std::int64_t> v;
                 for (const auto& s : items_of(key, n)) v.push_back(parse_int(key, s));
                 member(c) = v;
               },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 std::vector<std::string> items;
                 for (auto v : member(const_cast<ScenarioConfig&>(c))) items.push_back(std::to_string(v));
                 return list_node(items);
               }};
}

template <typename Member>
Field string_list_field(std::string key, std::string doc, Member member) {
  return Field{key, "list of strings", std::move(doc), false,
               [member, key](ScenarioConfig& c, const YAML::Node& n) { member(c) = items_of(key, n); },
               [member](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                 return list_node(member(const_cast<ScenarioConfig&>(c)));
               }};
}

const std::vector<std::string> kProcesses{"none", "bpp_sphere", "bpp_cap", "ppp_cap", "bpp_disk",
                                          "ppp_disk", "cox", "orbit"};

std::vector<Field> build_schema() {
  std::vector<Field> f;
  f.push_back(Field{"scenario.kind", "one of remote post_disaster k_coverage custom",
                    "experiment to run; selects the defaults every other key starts from", true,
                    [](ScenarioConfig& c, const YAML::Node& n) {
                      const std::string v = trim(scalar_of("scenario.kind", n));
                      for (auto k : {ScenarioKind::remote, ScenarioKind::post_disaster, ScenarioKind::k_coverage,
                                     ScenarioKind::custom}) {
                        if (v == scenario_kind_name(k)) {
                          c.kind = k;
                          return;
                        }
                      }
                      fail("scenario.kind", "unknown scenario kind '" + v + "'");
                    },
                    [](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                      return plain(std::string(scenario_kind_name(c.kind)));
                    }});
  f.push_back(int_field("scenario.trials", "Monte-Carlo trials per evaluated point",
                        [](ScenarioConfig& c) -> auto& { return c.trials; }, true));
  f.push_back(Field{"scenario.seed", "unsigned 64-bit integer",
                    "global seed; --seed takes precedence, and when both are absent NTNSIM_SEED, then 1, is used", false,
                    [](ScenarioConfig& c, const YAML::Node& n) {
                      c.seed = parse_uint("scenario.seed", scalar_of("scenario.seed", n));
                    },
                    [](const ScenarioConfig& c) -> std::optional<YAML::Node> {
                      if (!c.seed) return std::nullopt;
                      return plain(std::to_string(*c.seed));
                    }});
  f.push_back(Field{"scenario.label", "string", "free-form run label echoed into the manifest", false,
                    [](ScenarioConfig& c, const YAML::Node& n) { c.label = scalar_of("scenario.label", n); },
                    [](const ScenarioConfig& c) -> std::optional<YAML::Node> { return YAML::Node(c.label); }});

  f.push_back(choice_field("users.process", "reference-user region: spherical cap or planar disk", {"cap", "disk"},
                           [](ScenarioConfig& c) -> auto& { return c.user_process; }));
  f.push_back(real_field("users.density_per_km2", "user PPP intensity (placement only; one typical user per trial)",
                         [](ScenarioConfig& c) -> auto& { return c.user_density_per_km2; }));
  f.push_back(real_field("users.apex_angle", "full apex angle of the user cap [rad]; accepts e.g. pi/45",
                         [](ScenarioConfig& c) -> auto& { return c.user_apex_angle; }));
  f.push_back(real_field("users.disk_radius_km", "radius of the user disk [km]",
                         [](ScenarioConfig& c) -> auto& { return c.user_disk_radius_km; }));
  f.push_back(bool_field("base_station.enabled", "place a ground base station for relay availability",
                         [](ScenarioConfig& c) -> auto& { return c.base_station_enabled; }));
  f.push_back(real_field("base_station.arc_km", "surface arc from the site center to the base station [km]",
                         [](ScenarioConfig& c) -> auto& { return c.base_station_arc_km; }));

  for (Tier t : kAllTiers) {
    const auto i = static_cast<std::size_t>(t);
    const std::string p = "tiers." + std::string(tier_name(t)) + ".";
    auto tier = [i](ScenarioConfig& c) -> TierConfig& { return c.tiers[i]; };
    f.push_back(choice_field(p + "process", "point process for this tier", kProcesses,
                             [tier](ScenarioConfig& c) -> auto& { return tier(c).process; }));
    f.push_back(int_field(p + "count", "BPP point count (satellites per plane for orbit)",
                          [tier](ScenarioConfig& c) -> auto& { return tier(c).count; }));
    f.push_back(real_field(p + "density_per_km2", "PPP intensity [1/km^2]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).density_per_km2; }));
    f.push_back(real_field(p + "altitude_km", "sphere/cap processes: altitude above 6371 km [km]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).altitude_km; }));
    f.push_back(real_field(p + "altitude_m", "disk processes: height above the tangent plane [m]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).altitude_m; }));
    f.push_back(real_field(p + "apex_angle", "cap processes: full apex angle [rad]; 0 reuses users.apex_angle",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).apex_angle; }));
    f.push_back(real_field(p + "disk_radius_km", "disk processes: radius [km]; 0 reuses users.disk_radius_km",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).disk_radius_km; }));
    f.push_back(real_field(p + "cox.orbit_rate", "Cox: mean number of orbit planes",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).cox_orbit_rate; }));
    f.push_back(real_field(p + "cox.sats_per_orbit", "Cox: mean satellites per plane",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).cox_sats_per_orbit; }));
    f.push_back(real_field(p + "cox.altitude_min_km", "Cox: lowest orbit altitude [km]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).cox_altitude_min_km; }));
    f.push_back(real_field(p + "cox.altitude_max_km", "Cox: highest orbit altitude [km]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).cox_altitude_max_km; }));
    f.push_back(int_field(p + "orbit.planes", "orbit model: planes with evenly spaced ascending nodes",
                          [tier](ScenarioConfig& c) -> auto& { return tier(c).orbit_planes; }));
    f.push_back(real_field(p + "orbit.inclination", "orbit model: inclination of every plane [rad]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).orbit_inclination; }));
    f.push_back(real_field(p + "radio.tx_power_dbw", "transmit power [dBW]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).tx_power_dbw; }));
    f.push_back(real_field(p + "radio.tx_gain_db", "transmit antenna gain [dB]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).tx_gain_db; }));
    f.push_back(real_field(p + "radio.rx_gain_db", "receive antenna gain [dB]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).rx_gain_db; }));
    f.push_back(real_field(p + "radio.frequency_hz", "carrier frequency [Hz]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).frequency_hz; }));
    f.push_back(real_field(p + "radio.bandwidth_hz", "bandwidth [Hz]",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).bandwidth_hz; }));
    f.push_back(choice_field(p + "fading.kind", "small-scale fading model", {"none", "nakagami", "shadowed_rician"},
                             [tier](ScenarioConfig& c) -> auto& { return tier(c).fading_kind; }));
    f.push_back(real_field(p + "fading.m", "Nakagami shape / shadowing severity m",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).fading_m; }));
    f.push_back(real_field(p + "fading.b", "shadowed-Rician scatter power b (per component)",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).fading_b; }));
    f.push_back(real_field(p + "fading.omega", "mean (Nakagami) or LoS (shadowed-Rician) power omega",
                           [tier](ScenarioConfig& c) -> auto& { return tier(c).fading_omega; }));
  }

  f.push_back(real_field("noise.psd_dbm_hz", "noise power spectral density [dBm/Hz]",
                         [](ScenarioConfig& c) -> auto& { return c.noise.psd_dbm_hz; }));
  f.push_back(choice_field("metric.mode", "link quality: snr ignores interference, sinr sums visible interferers",
                           {"snr", "sinr"}, [](ScenarioConfig& c) -> auto& { return c.mode; }));
  f.push_back(real_list_field("metric.thresholds_db", "SNR/SINR thresholds for coverage curves [dB]",
                              [](ScenarioConfig& c) -> auto& { return c.thresholds_db; }));
  f.push_back(int_list_field("metric.k_values", "k values for k-coverage curves",
                             [](ScenarioConfig& c) -> auto& { return c.k_values; }));
  f.push_back(real_field("metric.capacity_threshold_bps", "capacity threshold used in run summaries [bit/s]",
                         [](ScenarioConfig& c) -> auto& { return c.capacity_threshold_bps; }));
  f.push_back(int_list_field("remote.n_sat_values", "satellite counts of the availability grid; empty uses tiers.sat.count",
                             [](ScenarioConfig& c) -> auto& { return c.remote_n_sat; }));
  f.push_back(int_list_field("remote.n_hap_values", "HAP counts of the availability grid; empty uses tiers.hap.count",
                             [](ScenarioConfig& c) -> auto& { return c.remote_n_hap; }));
  f.push_back(string_list_field("post_disaster.labels", "curve labels; empty uses a single curve named after scenario.label",
                                [](ScenarioConfig& c) -> auto& { return c.pd_labels; }));
  f.push_back(int_list_field("post_disaster.lap_counts", "LAP count per curve",
                             [](ScenarioConfig& c) -> auto& { return c.pd_lap_counts; }));
  f.push_back(int_list_field("post_disaster.hap_counts", "HAP count per curve",
                             [](ScenarioConfig& c) -> auto& { return c.pd_hap_counts; }));
  f.push_back(int_list_field("post_disaster.sat_counts", "satellite count per curve",
                             [](ScenarioConfig& c) -> auto& { return c.pd_sat_counts; }));
  return f;
}

const std::vector<Field>& schema() {
  static const std::vector<Field> s = build_schema();
  return s;
}

const Field* find_field(std::string_view key) {
  for (const Field& f : schema()) {
    if (f.key == key) return &f;
  }
  return nullptr;
}

void flatten(const YAML::Node& node, const std::string& prefix, std::vector<std::pair<std::string, YAML::Node>>& out) {
  if (node.IsMap()) {
    for (const auto& kv : node) {
      const std::string key = prefix.empty() ? kv.first.Scalar() : prefix + "." + kv.first.Scalar();
      if (kv.second.IsMap()) {
        if (find_field(key) != nullptr) fail(key, "expected a value, found a section");
        flatten(kv.second, key, out);
      } else {
        out.emplace_back(key, kv.second);
      }
    }
  } else if (!node.IsNull()) {
    throw ConfigError("configuration document must be a mapping of sections");
  }
}

void set_nested(YAML::Node root, const std::string& dotted, const YAML::Node& value) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto dot = dotted.find('.', start);
    parts.push_back(dotted.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  // yaml-cpp nodes are handles; walking with operator[] creates sections.
  std::vector<YAML::Node> chain{root};
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) chain.push_back(chain.back()[parts[i]]);
  chain.back()[parts.back()] = value;
}

TierConfig lap_defaults() {
  TierConfig t;
  t.process = "none";
  t.altitude_m = 80.0;
  t.altitude_km = 0.08;
  t.tx_power_dbw = 1.0;
  t.tx_gain_db = 10.0;
  t.fading_kind = "nakagami";
  t.fading_m = 3.0;
  t.fading_omega = 1.0;
  return t;
}

TierConfig hap_defaults() {
  TierConfig t;
  t.process = "bpp_cap";
  t.count = 50;
  t.altitude_km = 20.0;
  t.tx_power_dbw = 8.0;
  t.tx_gain_db = 20.0;
  t.fading_kind = "shadowed_rician";
  t.fading_b = 0.126;
  t.fading_m = 10.1;
  t.fading_omega = 0.835;
  return t;
}

TierConfig sat_defaults() {
  TierConfig t = hap_defaults();
  t.process = "bpp_sphere";
  t.count = 40;
  t.altitude_km = 550.0;
  t.tx_power_dbw = 15.0;
  t.tx_gain_db = 70.0;
  return t;
}

ProcessKind process_kind(std::string_view key, const std::string& name) {
  static const std::pair<const char*, ProcessKind> table[] = {
      {"none", ProcessKind::none},         {"bpp_sphere", ProcessKind::bpp_sphere},
      {"bpp_cap", ProcessKind::bpp_cap},   {"ppp_cap", ProcessKind::ppp_cap},
      {"bpp_disk", ProcessKind::bpp_disk}, {"ppp_disk", ProcessKind::ppp_disk},
      {"cox", ProcessKind::cox},           {"orbit", ProcessKind::orbit}};
  for (const auto& [n, k] : table) {
    if (name == n) return k;
  }
  fail(key, "unknown process '" + name + "'");
}

}  // namespace

ScenarioConfig default_config(ScenarioKind kind) {
  ScenarioConfig c;
  c.kind = kind;
  c.label = std::string(scenario_kind_name(kind));
  c.user_apex_angle = kPi / 45.0;
  at(c.tiers, Tier::lap) = lap_defaults();
  at(c.tiers, Tier::hap) = hap_defaults();
  at(c.tiers, Tier::sat) = sat_defaults();
  c.thresholds_db = {0.0};
  c.k_values = {1};

  switch (kind) {
    case ScenarioKind::remote:
      c.remote_n_sat = {0, 10, 20, 30, 40, 50, 60};
      c.remote_n_hap = {0, 25, 50};
      break;
    case ScenarioKind::post_disaster: {
      c.user_process = "disk";
      c.user_density_per_km2 = 100.0;
      c.user_disk_radius_km = 30.0;
      c.base_station_enabled = false;
      TierConfig& lap = at(c.tiers, Tier::lap);
      lap.process = "bpp_disk";
      lap.count = 1000;
      at(c.tiers, Tier::hap).count = 10;
      at(c.tiers, Tier::sat).count = 10;
      c.pd_labels = {"lap100_hap10_sat10", "lap1000_hap10_sat10", "lap1000_hap40_sat10", "lap1000_hap10_sat40"};
      c.pd_lap_counts = {100, 1000, 1000, 1000};
      c.pd_hap_counts = {10, 10, 40, 10};
      c.pd_sat_counts = {10, 10, 10, 40};
      break;
    }
    case ScenarioKind::k_coverage: {
      c.base_station_enabled = false;
      TierConfig& lap = at(c.tiers, Tier::lap);
      lap.process = "bpp_cap";
      lap.count = 1000;
      at(c.tiers, Tier::hap).count = 40;
      at(c.tiers, Tier::sat).process = "none";
      at(c.tiers, Tier::sat).count = 0;
      c.thresholds_db.clear();
      for (int i = 0; i <= 16; ++i) c.thresholds_db.push_back(-10.0 + 2.5 * i);
      c.k_values = {1, 4};
      break;
    }
    case ScenarioKind::custom:
      c.base_station_enabled = false;
      c.thresholds_db = {-10.0, 0.0, 10.0, 20.0, 30.0};
      break;
  }
  return c;
}

ScenarioConfig load_config(std::string_view yaml_text) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(yaml_text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("configuration is not valid YAML: ") + e.what());
  }
  std::vector<std::pair<std::string, YAML::Node>> entries;
  flatten(root, "", entries);

  std::set<std::string> present;
  for (const auto& [key, node] : entries) {
    if (find_field(key) == nullptr) fail(key, "unknown key");
    if (!present.insert(key).second) fail(key, "duplicate key");
  }
  for (const Field& f : schema()) {
    if (f.required && present.count(f.key) == 0) fail(f.key, "missing required key");
  }

  ScenarioConfig kind_probe;
  for (const auto& [key, node] : entries) {
    if (key == "scenario.kind") find_field(key)->set(kind_probe, node);
  }
  ScenarioConfig cfg = default_config(kind_probe.kind);
  for (const auto& [key, node] : entries) find_field(key)->set(cfg, node);
  validate(cfg);
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open configuration file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return load_config(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string write_config(const ScenarioConfig& cfg) {
  YAML::Node root(YAML::NodeType::Map);
  for (const Field& f : schema()) {
    if (auto v = f.get(cfg)) set_nested(root, f.key, *v);
  }
  YAML::Emitter out;
  out << root;
  return std::string(out.c_str()) + "\n";
}

void apply_override(ScenarioConfig& cfg, std::string_view key, std::string_view value) {
  const Field* f = find_field(key);
  if (f == nullptr) fail(key, "unknown key");
  YAML::Node node;
  try {
    node = YAML::Load(std::string(value));
  } catch (const YAML::Exception& e) {
    fail(key, std::string("cannot parse value: ") + e.what());
  }
  if (node.IsNull()) node = YAML::Node(std::string(value));
  f->set(cfg, node);
  validate(cfg);
}

bool schema_has_key(std::string_view key) { return find_field(key) != nullptr; }

std::vector<std::pair<std::string, std::string>> flatten_config(const ScenarioConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Field& f : schema()) {
    const auto v = f.get(cfg);
    if (!v) continue;
    if (v->IsSequence()) {
      std::string s;
      for (const auto& item : *v) s += (s.empty() ? "" : ",") + item.Scalar();
      out.emplace_back(f.key, s);
    } else {
      out.emplace_back(f.key, v->Scalar());
    }
  }
  return out;
}

std::string schema_text() {
  std::ostringstream os;
  os << "# Scenario configuration schema\n"
     << "#\n"
     << "# YAML document; each dotted key below is a nested section path, e.g.\n"
     << "#   tiers:\n"
     << "#     sat:\n"
     << "#       count: 40\n"
     << "# Keys not listed are rejected. Defaults depend on scenario.kind.\n"
     << "# Angles accept pi expressions: pi, 2*pi, pi/45, 3*pi/4.\n\n";
  const ScenarioConfig defaults = default_config(ScenarioKind::remote);
  for (const Field& f : schema()) {
    os << f.key << "\n    type: " << f.type << (f.required ? " (required)" : "") << "\n    " << f.doc << "\n";
    if (!f.required) {
      if (auto v = f.get(defaults)) {
        std::string text;
        if (v->IsSequence()) {
          for (const auto& item : *v) text += (text.empty() ? "" : ", ") + item.Scalar();
          text = "[" + text + "]";
        } else {
          text = v->Scalar();
        }
        os << "    default (remote): " << text << "\n";
      }
    }
  }
  return os.str();
}

void validate(const ScenarioConfig& c) {
  if (c.trials < 1) fail("scenario.trials", "must be >= 1");
  if (!(c.user_apex_angle > 0.0 && c.user_apex_angle <= 2.0 * kPi)) fail("users.apex_angle", "must lie in (0, 2pi]");
  if (!(c.user_disk_radius_km > 0.0)) fail("users.disk_radius_km", "must be positive");
  if (!(c.user_density_per_km2 >= 0.0)) fail("users.density_per_km2", "must be nonnegative");
  if (!(c.base_station_arc_km >= 0.0)) fail("base_station.arc_km", "must be nonnegative");
  for (Tier t : kAllTiers) {
    const TierConfig& tc = at(c.tiers, t);
    const std::string p = "tiers." + std::string(tier_name(t)) + ".";
    process_kind(p + "process", tc.process);
    if (tc.count < 0) fail(p + "count", "must be >= 0");
    if (!(tc.density_per_km2 >= 0.0)) fail(p + "density_per_km2", "must be nonnegative");
    if (!(tc.altitude_km >= 0.0)) fail(p + "altitude_km", "must be nonnegative");
    if (!(tc.apex_angle >= 0.0 && tc.apex_angle <= 2.0 * kPi)) fail(p + "apex_angle", "must lie in [0, 2pi]");
    if (!(tc.disk_radius_km >= 0.0)) fail(p + "disk_radius_km", "must be nonnegative");
    if (tc.orbit_planes < 1) fail(p + "orbit.planes", "must be >= 1");
    if (!(tc.orbit_inclination >= 0.0 && tc.orbit_inclination <= kPi)) fail(p + "orbit.inclination", "must lie in [0, pi]");
    if (tc.process == "cox" && !(tc.cox_altitude_min_km >= 160.0 && tc.cox_altitude_max_km <= 2000.0 &&
                                 tc.cox_altitude_min_km <= tc.cox_altitude_max_km)) {
      fail(p + "cox.altitude_min_km", "Cox altitudes must satisfy 160 <= min <= max <= 2000");
    }
    if (!(tc.frequency_hz > 0.0)) fail(p + "radio.frequency_hz", "must be positive");
    if (!(tc.bandwidth_hz > 0.0)) fail(p + "radio.bandwidth_hz", "must be positive");
    if (tc.fading_kind == "nakagami" && !(tc.fading_m >= 0.5)) fail(p + "fading.m", "Nakagami m must be >= 0.5");
    if (tc.fading_kind != "none" && !(tc.fading_omega > 0.0)) fail(p + "fading.omega", "must be positive");
    if (tc.fading_kind == "shadowed_rician" && !(tc.fading_b > 0.0 && tc.fading_m > 0.0)) {
      fail(p + "fading.b", "shadowed-Rician b and m must be positive");
    }
  }
  for (auto k : c.k_values) {
    if (k < 1) fail("metric.k_values", "every k must be >= 1");
  }
  for (auto n : c.remote_n_sat) {
    if (n < 0) fail("remote.n_sat_values", "counts must be >= 0");
  }
  for (auto n : c.remote_n_hap) {
    if (n < 0) fail("remote.n_hap_values", "counts must be >= 0");
  }
  const std::size_t curves = c.pd_lap_counts.size();
  if (c.pd_hap_counts.size() != curves || c.pd_sat_counts.size() != curves) {
    fail("post_disaster.hap_counts", "lap_counts, hap_counts and sat_counts must have equal lengths");
  }
  if (!c.pd_labels.empty() && c.pd_labels.size() != curves) {
    fail("post_disaster.labels", "needs one label per curve");
  }
  for (const auto* list : {&c.pd_lap_counts, &c.pd_hap_counts, &c.pd_sat_counts}) {
    for (auto n : *list) {
      if (n < 0) fail("post_disaster.lap_counts", "counts must be >= 0");
    }
  }
  if ((c.kind == ScenarioKind::k_coverage || c.kind == ScenarioKind::custom) && c.thresholds_db.empty()) {
    fail("metric.thresholds_db", "needs at least one threshold");
  }
}

namespace {

TierProcess tier_process(const ScenarioConfig& c, Tier t, std::optional<std::int64_t> count_override) {
  const TierConfig& tc = at(c.tiers, t);
  const std::string p = "tiers." + std::string(tier_name(t)) + ".";
  TierProcess tp;
  tp.tier = t;
  tp.kind = process_kind(p + "process", tc.process);
  tp.count = static_cast<std::size_t>(count_override.value_or(tc.count));
  tp.density_per_km2 = tc.density_per_km2;
  tp.radius_km = kEarthRadiusKm + tc.altitude_km;
  tp.apex_angle = tc.apex_angle > 0.0 ? tc.apex_angle : c.user_apex_angle;
  tp.disk_radius_km = tc.disk_radius_km > 0.0 ? tc.disk_radius_km : c.user_disk_radius_km;
  tp.altitude_m = tc.altitude_m;
  tp.orbit_rate = tc.cox_orbit_rate;
  tp.sats_per_orbit = tc.cox_sats_per_orbit;
  tp.altitude_min_km = tc.cox_altitude_min_km;
  tp.altitude_max_km = tc.cox_altitude_max_km;
  if (tp.kind == ProcessKind::orbit) {
    for (std::int64_t j = 0; j < tc.orbit_planes; ++j) {
      tp.planes.push_back(OrbitPlane{tc.orbit_inclination, 2.0 * kPi * static_cast<double>(j) /
                                                               static_cast<double>(tc.orbit_planes),
                                     tp.radius_km});
    }
  }
  return tp;
}

Deployment base_deployment(const ScenarioConfig& c) {
  validate(c);
  Deployment d;
  if (c.user_process == "disk") {
    d.users.kind = UserKind::disk;
    d.users.disk_radius_km = c.user_disk_radius_km;
  } else {
    d.users.kind = UserKind::cap;
    d.users.apex_angle = c.user_apex_angle;
  }
  if (c.base_station_enabled) {
    d.base_station = GeoPoint(kEarthRadiusKm, offset_direction(d.site, c.base_station_arc_km / kEarthRadiusKm, 0.0));
  }
  for (Tier t : kAllTiers) at(d.radio, t) = at(c.tiers, t).radio();
  d.noise = c.noise;
  d.mode = c.mode == "sinr" ? LinkMode::sinr : LinkMode::snr;
  return d;
}

}  // namespace

Deployment configured_deployment(const ScenarioConfig& c) {
  Deployment d = base_deployment(c);
  for (Tier t : kAllTiers) d.tiers.push_back(tier_process(c, t, std::nullopt));
  return d;
}

Deployment remote_deployment(const ScenarioConfig& c, std::int64_t n_sat, std::int64_t n_hap) {
  Deployment d = base_deployment(c);
  for (Tier t : kAllTiers) {
    std::optional<std::int64_t> n;
    if (t == Tier::sat) n = n_sat;
    if (t == Tier::hap) n = n_hap;
    d.tiers.push_back(tier_process(c, t, n));
  }
  return d;
}

Deployment post_disaster_deployment(const ScenarioConfig& c, std::int64_t n_lap, std::int64_t n_hap,
                                    std::int64_t n_sat) {
  Deployment d = base_deployment(c);
  d.tiers.push_back(tier_process(c, Tier::lap, n_lap));
  d.tiers.push_back(tier_process(c, Tier::hap, n_hap));
  d.tiers.push_back(tier_process(c, Tier::sat, n_sat));
  return d;
}

}  // namespace ntnsim
