#include "ntnsim/deployment.hpp"

#include <stdexcept>
#include <string>

namespace ntnsim {

namespace {

std::string tier_label(Tier t) { return "tier." + std::string(tier_name(t)); }

Constellation sample_tier(const Deployment& d, const TierProcess& tp, const StreamFamily& streams) {
  switch (tp.kind) {
    case ProcessKind::none:
      return {};
    case ProcessKind::fixed: {
      Constellation c;
      for (std::size_t i = 0; i < tp.fixed_points.size(); ++i) {
        c.add(tp.tier, static_cast<std::uint32_t>(i), tp.fixed_points[i]);
      }
      return c;
    }
    case ProcessKind::bpp_sphere:
      return sample_bpp_sphere(tp.count, tp.radius_km, streams, tp.tier);
    case ProcessKind::bpp_cap:
      return sample_bpp_cap(tp.count, SphericalCap(d.site, tp.apex_angle, tp.radius_km), streams, tp.tier);
    case ProcessKind::ppp_cap:
      return sample_ppp_cap(tp.density_per_km2, SphericalCap(d.site, tp.apex_angle, tp.radius_km), streams, tp.tier);
    case ProcessKind::bpp_disk:
      return sample_bpp_disk(tp.count, DiskRegion{d.site, tp.disk_radius_km}, tp.altitude_m, streams, tp.tier);
    case ProcessKind::ppp_disk:
      return sample_ppp_disk(tp.density_per_km2, DiskRegion{d.site, tp.disk_radius_km}, tp.altitude_m, streams,
                             tp.tier);
    case ProcessKind::cox: {
      auto cox = sample_cox_orbits(tp.orbit_rate, tp.sats_per_orbit, {tp.altitude_min_km, tp.altitude_max_km}, streams);
      Constellation c;
      for (const Platform& p : cox.satellites) c.add(tp.tier, p.index, p.position);
      return c;
    }
    case ProcessKind::orbit: {
      Constellation c;
      for (const Platform& p : sample_orbit_model(tp.planes, tp.count, streams)) c.add(tp.tier, p.index, p.position);
      return c;
    }
  }
  return {};
}

}  // namespace

void Deployment::validate() const {
  TierTable<bool> seen{};
  for (const TierProcess& tp : tiers) {
    if (at(seen, tp.tier)) throw std::invalid_argument("deployment has two processes for tier " + tier_label(tp.tier));
    at(seen, tp.tier) = true;
    if (tp.kind == ProcessKind::bpp_cap || tp.kind == ProcessKind::ppp_cap) {
      SphericalCap(site, tp.apex_angle, tp.radius_km);
    }
    if (tp.kind == ProcessKind::orbit && tp.planes.empty()) {
      throw std::invalid_argument(tier_label(tp.tier) + ": orbit process needs at least one plane");
    }
    at(radio, tp.tier).validate();
  }
  if (users.kind == UserKind::cap) SphericalCap(site, users.apex_angle, kEarthRadiusKm);
}

GeoPoint sample_user(const Deployment& d, std::uint64_t seed, std::uint64_t trial) {
  CounterRng rng = StreamFamily(seed, "user", trial).at(0);
  switch (d.users.kind) {
    case UserKind::fixed: return d.users.fixed;
    case UserKind::cap: return uniform_on_cap(SphericalCap(d.site, d.users.apex_angle, kEarthRadiusKm), rng);
    case UserKind::disk: return uniform_on_disk(DiskRegion{d.site, d.users.disk_radius_km}, 0.0, rng);
  }
  return d.users.fixed;
}

Constellation sample_platforms(const Deployment& d, std::uint64_t seed, std::uint64_t trial) {
  Constellation all;
  for (Tier t : kAllTiers) {
    for (const TierProcess& tp : d.tiers) {
      if (tp.tier != t) continue;
      all.append(sample_tier(d, tp, StreamFamily(seed, tier_label(t), trial)));
    }
  }
  return all;
}

TrialSample sample_trial(const Deployment& d, std::uint64_t seed, std::uint64_t trial) {
  return {sample_user(d, seed, trial), sample_platforms(d, seed, trial)};
}

CounterRng fading_stream(std::uint64_t seed, std::uint64_t trial, const Platform& p) {
  const auto entity = (static_cast<std::uint32_t>(p.tier) << 30) | (p.index & 0x3FFF'FFFFu);
  return StreamFamily(seed, "fading", trial).at(entity);
}

}  // namespace ntnsim
