use rand::Rng;

use super::{Compartment, EpidemicParams, HealthState};

/// Per-tick probability whose compounding over a day gives `per_day`.
pub fn per_tick_probability(per_day: f64, ticks_per_day: u32) -> f64 {
    if per_day <= 0.0 {
        return 0.0;
    }
    if per_day >= 1.0 {
        return 1.0;
    }
    1.0 - (1.0 - per_day).powf(1.0 / f64::from(ticks_per_day))
}

/// Advance one agent's disease by one tick.
pub fn progress_disease<R: Rng + ?Sized>(
    health: &HealthState,
    params: &EpidemicParams,
    rng: &mut R,
    ticks_per_day: u32,
) -> HealthState {
    let mut h = *health;
    let rate = |p: f64| per_tick_probability(p, ticks_per_day);
    match h.compartment {
        Compartment::S | Compartment::Dead => {}
        Compartment::E => {
            h.ticks_in_compartment += 1;
            if h.ticks_in_compartment >= h.incubation_ticks {
                h.enter(Compartment::I1);
                h.believes_sick = rng.random::<f64>() < 1.0 - params.asymptomatic_fraction;
            }
        }
        Compartment::R => {
            if params.p_waning > 0.0 && rng.random::<f64>() < rate(params.p_waning) {
                h.enter(Compartment::S);
                h.believes_sick = false;
                h.tested_positive = false;
                h.detected = false;
            } else {
                h.ticks_in_compartment += 1;
            }
        }
        c => {
            let die = rate(params.p_die.get(c));
            let recover = rate(params.p_recover.get(c));
            let u: f64 = rng.random();
            if u < die {
                h.enter(Compartment::Dead);
                h.believes_sick = false;
            } else if u < die + recover {
                h.enter(Compartment::R);
                h.believes_sick = false;
            } else {
                match c {
                    Compartment::I1 if h.believes_sick => {
                        if rng.random::<f64>() < rate(params.p_visit_doctor) {
                            h.enter(Compartment::O1);
                        } else if h.ticks_in_compartment + 1 >= ticks_per_day {
                            // A full sick day at home without seeing a doctor.
                            h.enter(Compartment::I2);
                        } else {
                            h.ticks_in_compartment += 1;
                        }
                    }
                    Compartment::I2 => {
                        if rng.random::<f64>() < rate(params.p_late_doctor) {
                            h.enter(Compartment::O2);
                        } else {
                            h.ticks_in_compartment += 1;
                        }
                    }
                    _ => h.ticks_in_compartment += 1,
                }
            }
        }
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{stream_rng, Stream};

    fn params() -> EpidemicParams {
        EpidemicParams::default()
    }

    #[test]
    fn per_tick_rate_compounds_to_daily_rate() {
        for p in [0.0, 0.05, 0.3, 0.9, 1.0] {
            let q = per_tick_probability(p, 4);
            let daily = 1.0 - (1.0 - q).powi(4);
            assert!((daily - p).abs() < 1e-12, "{p} {daily}");
        }
    }

    #[test]
    fn dead_is_absorbing() {
        let mut rng = stream_rng(1, Stream::Epidemic);
        let mut h = HealthState {
            compartment: Compartment::Dead,
            ..HealthState::susceptible()
        };
        for _ in 0..1000 {
            h = progress_disease(&h, &params(), &mut rng, 4);
            assert_eq!(h.compartment, Compartment::Dead);
        }
    }

    #[test]
    fn recovered_is_absorbing_without_waning() {
        let mut rng = stream_rng(2, Stream::Epidemic);
        let mut h = HealthState {
            compartment: Compartment::R,
            ..HealthState::susceptible()
        };
        for _ in 0..1000 {
            h = progress_disease(&h, &params(), &mut rng, 4);
            assert_eq!(h.compartment, Compartment::R);
        }
    }

    #[test]
    fn waning_returns_to_susceptible() {
        let mut p = params();
        p.p_waning = 1.0;
        let mut rng = stream_rng(2, Stream::Epidemic);
        let h = HealthState {
            compartment: Compartment::R,
            detected: true,
            ..HealthState::susceptible()
        };
        let h = progress_disease(&h, &p, &mut rng, 4);
        assert_eq!(h.compartment, Compartment::S);
        assert!(!h.detected);
    }

    #[test]
    fn fourteen_day_incubation_ends_at_tick_56() {
        let mut p = params();
        p.incubation_days = [14, 14];
        let mut rng = stream_rng(3, Stream::Epidemic);
        let mut h = HealthState::exposed(p.sample_incubation_ticks(&mut rng, 4));
        for tick in 1..=56 {
            h = progress_disease(&h, &p, &mut rng, 4);
            if tick < 56 {
                assert_eq!(h.compartment, Compartment::E, "tick {tick}");
            }
        }
        assert_eq!(h.compartment, Compartment::I1);
        assert_eq!(h.ticks_in_compartment, 0);
    }

    #[test]
    fn asymptomatic_agents_never_see_a_doctor() {
        let mut p = params();
        p.asymptomatic_fraction = 1.0;
        p.p_visit_doctor = 1.0;
        let mut rng = stream_rng(4, Stream::Epidemic);
        for _ in 0..200 {
            let mut h = HealthState::exposed(1);
            for _ in 0..400 {
                h = progress_disease(&h, &p, &mut rng, 4);
                assert!(!h.compartment.is_under_care());
                assert_ne!(h.compartment, Compartment::I2);
            }
        }
    }

    #[test]
    fn symptomatic_without_doctor_moves_to_i2_after_a_day() {
        let mut p = params();
        p.asymptomatic_fraction = 0.0;
        p.p_visit_doctor = 0.0;
        p.p_recover = super::super::CompartmentRates {
            i1: 0.0,
            i2: 0.0,
            o1: 0.0,
            o2: 0.0,
        };
        p.p_die = p.p_recover;
        let mut rng = stream_rng(5, Stream::Epidemic);
        let mut h = HealthState::exposed(1);
        h = progress_disease(&h, &p, &mut rng, 4);
        assert_eq!(h.compartment, Compartment::I1);
        assert!(h.believes_sick);
        for _ in 0..3 {
            h = progress_disease(&h, &p, &mut rng, 4);
            assert_eq!(h.compartment, Compartment::I1);
        }
        h = progress_disease(&h, &p, &mut rng, 4);
        assert_eq!(h.compartment, Compartment::I2);
    }

    #[test]
    fn every_observed_transition_is_an_edge() {
        let mut p = params();
        p.p_waning = 0.05;
        let mut rng = stream_rng(6, Stream::Epidemic);
        for _ in 0..300 {
            let mut h = HealthState::exposed(2);
            for _ in 0..600 {
                let next = progress_disease(&h, &p, &mut rng, 4);
                if next.compartment != h.compartment {
                    assert!(h.compartment.can_transition_to(next.compartment));
                    assert_eq!(next.ticks_in_compartment, 0);
                }
                h = next;
            }
        }
    }
}
