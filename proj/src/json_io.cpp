#include "fleet/json_io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace fleet {

namespace {

constexpr int kSchemaVersion = 1;

void expect_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  if (!obj.is_object()) throw std::runtime_error(where + ": expected an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) throw std::runtime_error(where + ": unknown field \"" + key + "\"");
}

void check_version(const ordered_json& j, const std::string& where) {
  if (!j.contains("schema_version"))
    throw std::runtime_error(where + ": missing schema_version");
  const int v = j.at("schema_version").get<int>();
  if (v != kSchemaVersion)
    throw std::runtime_error(where + ": unsupported schema_version " + std::to_string(v) +
                             " (expected " + std::to_string(kSchemaVersion) + ")");
}

ordered_json point_to_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

Point point_from_json(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw std::runtime_error(where + ": a point must be a [x, y] array");
  return Point{j[0].get<double>(), j[1].get<double>()};
}

ordered_json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ordered_json::parse(in);  // parse_error carries the byte offset
}

void write_file(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << '\n';
}

}  // namespace

ordered_json instance_to_json(const Instance& inst) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  ordered_json g;
  g["width_m"] = inst.geometry.width_m;
  g["height_m"] = inst.geometry.height_m;
  g["depot"] = point_to_json(inst.geometry.depot);
  g["charger_positions"] = ordered_json::array();
  for (const auto& p : inst.geometry.charger_positions)
    g["charger_positions"].push_back(point_to_json(p));
  g["speed_m_per_min"] = inst.geometry.speed_m_per_min;
  g["energy_rate_per_min"] = inst.geometry.energy_rate_per_min;
  j["geometry"] = std::move(g);

  j["robots"] = ordered_json::array();
  for (const auto& r : inst.robots) {
    ordered_json jr;
    jr["id"] = r.id;
    jr["soc_initial"] = r.soc_initial;
    jr["soc_reserve"] = r.soc_reserve;
    jr["soc_max"] = r.soc_max;
    jr["idle_aging"] = r.idle_aging;
    jr["modes"] = ordered_json::array();
    for (const auto& m : r.modes) {
      ordered_json jm;
      jm["id"] = m.id;
      jm["name"] = m.name;
      jm["rate"] = m.rate;
      jm["aging"] = m.aging;
      jr["modes"].push_back(std::move(jm));
    }
    j["robots"].push_back(std::move(jr));
  }

  j["tasks"] = ordered_json::array();
  for (const auto& t : inst.tasks) {
    ordered_json jt;
    jt["id"] = t.id;
    jt["location"] = point_to_json(t.location);
    jt["release"] = t.release;
    jt["due"] = t.due;
    jt["service"] = t.service;
    jt["energy"] = t.energy;
    j["tasks"].push_back(std::move(jt));
  }

  j["chargers"] = ordered_json::array();
  for (const auto& c : inst.chargers) {
    ordered_json jc;
    jc["id"] = c.id;
    jc["position"] = point_to_json(c.position);
    j["chargers"].push_back(std::move(jc));
  }

  j["horizon"] = inst.horizon;
  return j;
}

Instance instance_from_json(const ordered_json& j) {
  expect_keys(j, {"schema_version", "geometry", "robots", "tasks", "chargers", "horizon"},
              "instance");
  check_version(j, "instance");

  Instance inst;
  const auto& g = j.at("geometry");
  expect_keys(g,
              {"width_m", "height_m", "depot", "charger_positions", "speed_m_per_min",
               "energy_rate_per_min"},
              "geometry");
  inst.geometry.width_m = g.at("width_m").get<double>();
  inst.geometry.height_m = g.at("height_m").get<double>();
  inst.geometry.depot = point_from_json(g.at("depot"), "geometry.depot");
  for (const auto& p : g.at("charger_positions"))
    inst.geometry.charger_positions.push_back(point_from_json(p, "geometry.charger_positions"));
  inst.geometry.speed_m_per_min = g.at("speed_m_per_min").get<double>();
  inst.geometry.energy_rate_per_min = g.at("energy_rate_per_min").get<double>();

  for (const auto& jr : j.at("robots")) {
    expect_keys(jr, {"id", "soc_initial", "soc_reserve", "soc_max", "idle_aging", "modes"},
                "robot");
    Robot r;
    r.id = jr.at("id").get<int>();
    r.soc_initial = jr.at("soc_initial").get<double>();
    r.soc_reserve = jr.at("soc_reserve").get<double>();
    r.soc_max = jr.at("soc_max").get<double>();
    r.idle_aging = jr.at("idle_aging").get<double>();
    for (const auto& jm : jr.at("modes")) {
      expect_keys(jm, {"id", "name", "rate", "aging"}, "mode");
      ChargingMode m;
      m.id = jm.at("id").get<int>();
      m.name = jm.at("name").get<std::string>();
      m.rate = jm.at("rate").get<double>();
      m.aging = jm.at("aging").get<double>();
      r.modes.push_back(std::move(m));
    }
    inst.robots.push_back(std::move(r));
  }

  for (const auto& jt : j.at("tasks")) {
    expect_keys(jt, {"id", "location", "release", "due", "service", "energy"}, "task");
    Task t;
    t.id = jt.at("id").get<int>();
    t.location = point_from_json(jt.at("location"), "task.location");
    t.release = jt.at("release").get<double>();
    t.due = jt.at("due").get<double>();
    t.service = jt.at("service").get<double>();
    t.energy = jt.at("energy").get<double>();
    inst.tasks.push_back(t);
  }

  for (const auto& jc : j.at("chargers")) {
    expect_keys(jc, {"id", "position"}, "charger");
    Charger c;
    c.id = jc.at("id").get<int>();
    c.position = point_from_json(jc.at("position"), "charger.position");
    inst.chargers.push_back(c);
  }

  inst.horizon = j.at("horizon").get<double>();
  validate_instance(inst);
  return inst;
}

void save_instance(const Instance& inst, const std::string& path) {
  write_file(instance_to_json(inst), path);
}

Instance load_instance(const std::string& path) { return instance_from_json(read_file(path)); }

namespace {

ordered_json node_to_json(int node) {
  if (node == kSourceNode) return "src";
  if (node == kSinkNode) return "snk";
  return node;
}

int node_from_json(const ordered_json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "src") return kSourceNode;
    if (s == "snk") return kSinkNode;
    throw std::runtime_error("schedule: unknown node \"" + s + "\"");
  }
  const int id = j.get<int>();
  if (id < 0) throw std::runtime_error("schedule: negative task node");
  return id;
}

}  // namespace

ordered_json schedule_to_json(const FleetSchedule& sched) {
  ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["robots"] = ordered_json::array();
  for (const auto& rs : sched.robots) {
    ordered_json jr;
    jr["id"] = rs.robot;
    jr["degradation"] = rs.degradation;
    jr["legs"] = ordered_json::array();
    for (const auto& leg : rs.legs) {
      ordered_json jl;
      jl["from"] = node_to_json(leg.from);
      jl["to"] = node_to_json(leg.to);
      if (leg.is_charge()) {
        const auto& c = *leg.charge;
        jl["charger"] = c.charger;
        jl["mode"] = c.mode;
        jl["start"] = c.start;
        jl["queue"] = c.queue;
        jl["duration"] = c.duration;
        jl["post_wait"] = c.post_wait;
        jl["post_soc"] = c.post_soc;
        if (c.idle_product_lin) jl["idle_product_lin"] = *c.idle_product_lin;
      }
      jr["legs"].push_back(std::move(jl));
    }
    j["robots"].push_back(std::move(jr));
  }
  j["tasks"] = ordered_json::array();
  for (const auto& [id, t] : sched.tasks) {
    ordered_json jt;
    jt["id"] = id;
    jt["start"] = t.start;
    jt["tardiness"] = t.tardiness;
    jt["arrival_soc"] = t.arrival_soc;
    j["tasks"].push_back(std::move(jt));
  }
  j["max_degradation"] = sched.max_degradation;
  return j;
}

FleetSchedule schedule_from_json(const ordered_json& j) {
  expect_keys(j, {"schema_version", "robots", "tasks", "max_degradation"}, "schedule");
  check_version(j, "schedule");
  FleetSchedule sched;
  for (const auto& jr : j.at("robots")) {
    expect_keys(jr, {"id", "degradation", "legs"}, "schedule.robot");
    RobotSchedule rs;
    rs.robot = jr.at("id").get<int>();
    rs.degradation = jr.at("degradation").get<double>();
    for (const auto& jl : jr.at("legs")) {
      expect_keys(jl,
                  {"from", "to", "charger", "mode", "start", "queue", "duration", "post_wait",
                   "post_soc", "idle_product_lin"},
                  "schedule.leg");
      Leg leg;
      leg.from = node_from_json(jl.at("from"));
      leg.to = node_from_json(jl.at("to"));
      if (jl.contains("charger")) {
        ChargeDetail c;
        c.charger = jl.at("charger").get<int>();
        c.mode = jl.at("mode").get<int>();
        c.start = jl.at("start").get<double>();
        c.queue = jl.at("queue").get<double>();
        c.duration = jl.at("duration").get<double>();
        c.post_wait = jl.at("post_wait").get<double>();
        c.post_soc = jl.at("post_soc").get<double>();
        if (jl.contains("idle_product_lin"))
          c.idle_product_lin = jl.at("idle_product_lin").get<double>();
        leg.charge = c;
      }
      rs.legs.push_back(std::move(leg));
    }
    sched.robots.push_back(std::move(rs));
  }
  for (const auto& jt : j.at("tasks")) {
    expect_keys(jt, {"id", "start", "tardiness", "arrival_soc"}, "schedule.task");
    TaskTiming t;
    t.start = jt.at("start").get<double>();
    t.tardiness = jt.at("tardiness").get<double>();
    t.arrival_soc = jt.at("arrival_soc").get<double>();
    sched.tasks[jt.at("id").get<int>()] = t;
  }
  sched.max_degradation = j.at("max_degradation").get<double>();
  return sched;
}

void save_schedule(const FleetSchedule& sched, const std::string& path) {
  write_file(schedule_to_json(sched), path);
}

FleetSchedule load_schedule(const std::string& path) { return schedule_from_json(read_file(path)); }

ordered_json config_to_json(const Config& cfg) {
  ordered_json j;
  j["lambda"] = cfg.lambda_wait;
  j["mu"] = cfg.mu_tardiness;
  j["rho"] = cfg.rho_balance;
  j["soc_partitions"] = cfg.soc_partitions;
  j["wait_partitions"] = cfg.wait_partitions;
  j["feas_tol"] = cfg.feas_tol;
  j["int_tol"] = cfg.int_tol;
  j["rel_gap"] = cfg.rel_gap;
  return j;
}

Config config_from_json(const ordered_json& j) {
  expect_keys(j,
              {"lambda", "mu", "rho", "soc_partitions", "wait_partitions", "feas_tol", "int_tol",
               "rel_gap"},
              "config");
  Config cfg;
  if (j.contains("lambda")) cfg.lambda_wait = j.at("lambda").get<double>();
  if (j.contains("mu")) cfg.mu_tardiness = j.at("mu").get<double>();
  if (j.contains("rho")) cfg.rho_balance = j.at("rho").get<double>();
  if (j.contains("soc_partitions")) cfg.soc_partitions = j.at("soc_partitions").get<int>();
  if (j.contains("wait_partitions")) cfg.wait_partitions = j.at("wait_partitions").get<int>();
  if (j.contains("feas_tol")) cfg.feas_tol = j.at("feas_tol").get<double>();
  if (j.contains("int_tol")) cfg.int_tol = j.at("int_tol").get<double>();
  if (j.contains("rel_gap")) cfg.rel_gap = j.at("rel_gap").get<double>();
  validate_config(cfg);
  return cfg;
}

Config load_config(const std::string& path) { return config_from_json(read_file(path)); }

}  // namespace fleet
