#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "harkit/rng.hpp"
#include "harkit/types.hpp"

namespace harkit {

// ---------------------------------------------------------------------------
// Simulated cohorts: a deterministic generator used to exercise the pipeline
// without the restricted study data. Class structure is fully configurable,
// so tests can plant known feature/class relationships.
// ---------------------------------------------------------------------------

enum class MotionKind {
    Static,  // constant gravity projection plus noise
    Gait,    // gravity plus a quasi-periodic oscillation on selected channels
    Ramp,    // blend from the previous block's gravity to the next block's
};

/// Per-activity generative parameters. `gravity` holds the mean acceleration
/// of all six channels (thigh x/y/z, back x/y/z) in g.
struct ActivityModel {
    MotionKind kind = MotionKind::Static;
    std::array<double, 6> gravity{};
};

struct ScheduleEntry {
    FineActivity activity = FineActivity::Sitting;
    double duration_s = 0.0;
};

struct ParticipantSpec {
    std::string id;
    double noise_sd = 0.03;           // per-sample Gaussian noise, g
    double gait_amplitude = 0.30;     // walking oscillation amplitude, g
    double gait_freq_hz = 1.8;
    double drift_amplitude = 0.0;     // slow back-z drift while walking, g
    std::array<double, 6> bias{};     // idiosyncratic posture offset, g
    std::vector<ScheduleEntry> schedule;
};

struct CohortSpec {
    std::array<ActivityModel, kFineActivityCount> activities{};
    std::vector<ParticipantSpec> participants;
};

namespace detail {

struct Block {
    FineActivity activity;
    double start_s, end_s;
    std::array<double, 6> phase{};  // per-channel gait phase offsets
};

inline double gait_channel_weight(int channel) {
    switch (channel) {
        case 0: return 1.0;   // thigh x
        case 2: return 0.7;   // thigh z
        case 3: return 0.45;  // back x
        default: return 0.0;
    }
}

inline double block_value(const CohortSpec& spec, const ParticipantSpec& p,
                          const std::vector<Block>& blocks, std::size_t b, int channel,
                          double t) {
    const Block& blk = blocks[b];
    const ActivityModel& model = spec.activities[static_cast<int>(blk.activity)];
    switch (model.kind) {
        case MotionKind::Static:
            return model.gravity[channel];
        case MotionKind::Gait: {
            double v = model.gravity[channel];
            const double w = gait_channel_weight(channel) * p.gait_amplitude;
            if (w != 0.0) {
                const double phase = 2.0 * M_PI * p.gait_freq_hz * t + blk.phase[channel];
                v += w * (std::sin(phase) + 0.4 * std::sin(2.0 * phase + 1.3));
            }
            if (channel == 5 && p.drift_amplitude != 0.0)
                v += p.drift_amplitude * std::sin(2.0 * M_PI * 0.08 * t);
            return v;
        }
        case MotionKind::Ramp: {
            // Blend between the neighbouring blocks' gravity levels; at a
            // schedule edge fall back to the transfer's own gravity.
            const std::array<double, 6>& from =
                b > 0 ? spec.activities[static_cast<int>(blocks[b - 1].activity)].gravity
                      : model.gravity;
            const std::array<double, 6>& to =
                b + 1 < blocks.size()
                    ? spec.activities[static_cast<int>(blocks[b + 1].activity)].gravity
                    : model.gravity;
            const double u = (t - blk.start_s) / (blk.end_s - blk.start_s);
            const double blend = 0.5 * (1.0 - std::cos(M_PI * u));
            return from[channel] + (to[channel] - from[channel]) * blend;
        }
    }
    return 0.0;
}

}  // namespace detail

/// Generate one participant's session. Pure function of (spec, index, seed).
inline RecordingSession simulate_session(const CohortSpec& spec, std::size_t participant_index,
                                         std::uint64_t seed) {
    const ParticipantSpec& p = spec.participants.at(participant_index);
    if (p.schedule.empty()) throw ConfigError("cohort: participant schedule is empty");

    std::vector<detail::Block> blocks;
    double t = 0.0;
    Rng phase_rng(derive_seed(seed, participant_index, 0xabcdULL));
    for (const ScheduleEntry& e : p.schedule) {
        if (e.duration_s <= 0.0) throw ConfigError("cohort: schedule durations must be positive");
        detail::Block b;
        b.activity = e.activity;
        b.start_s = t;
        b.end_s = t + e.duration_s;
        for (int c = 0; c < 6; ++c) b.phase[c] = phase_rng.uniform(0.0, 2.0 * M_PI);
        blocks.push_back(b);
        t = b.end_s;
    }
    const double total = t;

    RecordingSession session;
    session.participant_id = p.id;
    for (const detail::Block& b : blocks)
        session.annotations.intervals.push_back({b.start_s, b.end_s, b.activity});

    auto render = [&](SensorId sensor, double rate, int channel_base) {
        TriaxialSeries series;
        series.sensor_id = sensor;
        series.rate_hz = rate;
        series.start_time = 0.0;
        const std::size_t n = static_cast<std::size_t>(std::llround(total * rate));
        std::size_t block = 0;
        std::array<Rng, 3> noise = {
            Rng(derive_seed(seed, participant_index, 100 + channel_base)),
            Rng(derive_seed(seed, participant_index, 101 + channel_base)),
            Rng(derive_seed(seed, participant_index, 102 + channel_base)),
        };
        for (int a = 0; a < 3; ++a) series.axes[a].reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double ti = static_cast<double>(i) / rate;
            while (block + 1 < blocks.size() && ti >= blocks[block].end_s) ++block;
            for (int a = 0; a < 3; ++a) {
                const int channel = channel_base + a;
                double v = detail::block_value(spec, p, blocks, block, channel, ti);
                v += p.bias[channel] + noise[a].normal(0.0, p.noise_sd);
                series.axes[a].push_back(v);
            }
        }
        return series;
    };

    session.thigh = render(SensorId::UpperThigh, kThighRateHz, 0);
    session.back = render(SensorId::LowerBack, kBackRateHz, 3);
    return session;
}

/// Deterministic simulated cohort; same (spec, seed) gives bit-identical data.
inline std::vector<RecordingSession> simulate_cohort(const CohortSpec& spec, std::uint64_t seed) {
    if (spec.participants.empty()) throw ConfigError("cohort: no participants");
    std::vector<RecordingSession> sessions;
    sessions.reserve(spec.participants.size());
    for (std::size_t i = 0; i < spec.participants.size(); ++i)
        sessions.push_back(simulate_session(spec, i, seed));
    return sessions;
}

// ---------------------------------------------------------------------------
// Reference cohort patterned on the study's published class balance
// ---------------------------------------------------------------------------

/// Physically plausible activity models: postures as gravity projections,
/// walking with gait oscillation, transfers as ramps.
inline std::array<ActivityModel, kFineActivityCount> reference_activity_models() {
    std::array<ActivityModel, kFineActivityCount> m{};
    auto set = [&](FineActivity f, MotionKind kind, std::array<double, 6> g) {
        m[static_cast<int>(f)] = ActivityModel{kind, g};
    };
    //                         thigh x  thigh y thigh z  back x  back y  back z
    set(FineActivity::Walking, MotionKind::Gait,
        {0.97, 0.05, 0.12, 0.98, 0.03, 0.14});
    set(FineActivity::Standing, MotionKind::Static,
        {0.98, 0.05, 0.10, 0.99, 0.03, 0.12});
    set(FineActivity::Sitting, MotionKind::Static,
        {0.10, 0.05, 0.96, 0.93, 0.03, 0.33});
    set(FineActivity::Supine, MotionKind::Static,
        {0.05, 0.08, 0.98, 0.05, 0.03, 0.97});
    set(FineActivity::LeftLateral, MotionKind::Static,
        {0.05, 0.70, 0.68, 0.03, 0.72, 0.66});
    set(FineActivity::RightLateral, MotionKind::Static,
        {0.05, -0.70, 0.68, 0.03, -0.72, 0.66});
    for (FineActivity f : {FineActivity::SitToStand, FineActivity::StandToSit,
                           FineActivity::SitToLie, FineActivity::LieToSit})
        set(f, MotionKind::Ramp, {});
    return m;
}

/// Cohort whose segmented window histogram approximates the study's class
/// balance (walk 8.0%, stand 11.6%, sit 73.5%, lying 5.5%, transfers 1.4%).
/// Blocks are aligned to the 2 s grid so no windows are lost to mixing.
inline CohortSpec reference_cohort_spec(std::size_t participant_count = 24,
                                        std::uint64_t seed = 7) {
    CohortSpec spec;
    spec.activities = reference_activity_models();
    Rng rng(derive_seed(seed, 0xc0483ULL));

    for (std::size_t p = 0; p < participant_count; ++p) {
        ParticipantSpec ps;
        char buf[8];
        std::snprintf(buf, sizeof(buf), "P%02zu", p + 1);
        ps.id = buf;
        ps.noise_sd = 0.03;
        ps.gait_amplitude = rng.uniform(0.25, 0.45);
        ps.gait_freq_hz = rng.uniform(1.5, 2.0);
        ps.drift_amplitude = (p % 8 == 3) ? 0.20 : 0.0;
        for (int c = 0; c < 6; ++c) ps.bias[c] = rng.normal(0.0, 0.015);

        // 286 windows: 23 walk, 33 stand, 210 sit, 16 lying, 4 transfers.
        const int left_w = p < 5 ? 4 : 0;
        const int right_w = p < 2 ? 4 : 0;
        const int supine_w = 16 - left_w - right_w;
        auto add = [&](FineActivity f, int windows) {
            if (windows > 0) ps.schedule.push_back({f, 2.0 * windows});
        };
        add(FineActivity::Sitting, 106);
        add(FineActivity::SitToStand, 1);
        add(FineActivity::Standing, 14);
        add(FineActivity::Walking, 12);
        add(FineActivity::Standing, 10);
        add(FineActivity::Walking, 11);
        add(FineActivity::Standing, 9);
        add(FineActivity::StandToSit, 1);
        add(FineActivity::Sitting, 52);
        add(FineActivity::SitToLie, 1);
        add(FineActivity::Supine, supine_w);
        add(FineActivity::LeftLateral, left_w);
        add(FineActivity::RightLateral, right_w);
        add(FineActivity::LieToSit, 1);
        add(FineActivity::Sitting, 52);
        spec.participants.push_back(std::move(ps));
    }
    return spec;
}

}  // namespace harkit
