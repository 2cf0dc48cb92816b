use super::{Agent, Slot, World};
use crate::needs::{Activity, ActivityContext, ActivityKind};
use crate::types::{AgeGroup, PlaceId, PlaceKind};

/// Activities physically possible for `agent` this tick, before policy.
///
/// `nonessential` is the shop the agent would visit if it went shopping;
/// the caller draws it so the behaviour stream stays in one place.
pub fn available_context(world: &World, agent: &Agent, nonessential: Option<PlaceId>) -> ActivityContext {
    debug_assert!(agent.is_alive(), "dead agents have no context");
    let week = world.clock.week_index();
    let home = agent.effective_home(week);
    let mut c: Vec<Activity> = Vec::with_capacity(5);

    if agent.health.compartment.is_under_care() {
        let hospitals: Vec<PlaceId> = world.places_of(PlaceKind::Hospital).map(|p| p.id).collect();
        let h = hospitals[agent.id.index() % hospitals.len()];
        return ActivityContext::new(vec![Activity::new(ActivityKind::VisitDoctor, h)]);
    }

    let slot = world.config.schedule.slot(agent.age_group, &world.clock);
    match slot {
        Slot::Rest => c.push(Activity::new(ActivityKind::RestAtHome, home)),
        Slot::Duty if agent.work_or_school.is_some() => {
            let place = agent.work_or_school.unwrap();
            match agent.age_group {
                AgeGroup::Worker => {
                    c.push(Activity::new(ActivityKind::WorkAtOffice, place));
                    if agent.telework_capable {
                        c.push(Activity::new(ActivityKind::WorkAtHome, home));
                    }
                }
                AgeGroup::Child | AgeGroup::Student => c.push(Activity::new(ActivityKind::AttendSchool, place)),
                AgeGroup::Retiree => {}
            }
            c.push(Activity::new(ActivityKind::StayHome, home));
        }
        Slot::Duty | Slot::Free => {
            c.push(Activity::new(ActivityKind::ShopEssential, agent.essential_shop));
            if let Some(shop) = nonessential {
                c.push(Activity::new(ActivityKind::ShopNonessential, shop));
            }
            c.push(Activity::new(
                ActivityKind::Leisure,
                world.clusters[agent.cluster].leisure,
            ));
            c.push(Activity::new(ActivityKind::StayHome, home));
        }
    }
    if agent.health.believes_sick && !c.iter().any(|a| a.kind == ActivityKind::RestAtHome) {
        c.push(Activity::new(ActivityKind::RestAtHome, home));
    }
    ActivityContext::new(c)
}

/// Does this tick offer free time to the agent, and so a shop choice?
pub(crate) fn wants_shop_choice(world: &World, agent: &Agent) -> bool {
    if agent.health.compartment.is_under_care() {
        return false;
    }
    match world.config.schedule.slot(agent.age_group, &world.clock) {
        Slot::Free => true,
        Slot::Duty => agent.work_or_school.is_none(),
        Slot::Rest => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clock::Clock;
    use crate::harness::ScenarioConfig;
    use crate::world::generate_population;

    fn world_at(tick: u64) -> World {
        let mut w = generate_population(&ScenarioConfig::default(), 8).unwrap();
        w.clock = Clock::at(tick, 4);
        w
    }

    fn kinds(w: &World, pick: impl Fn(&Agent) -> bool) -> Vec<ActivityKind> {
        let a = w.agents.iter().find(|a| pick(a)).unwrap();
        available_context(w, a, None).kinds()
    }

    #[test]
    fn night_is_rest_only() {
        let w = world_at(3);
        for a in &w.agents {
            assert_eq!(available_context(&w, a, None).kinds(), [ActivityKind::RestAtHome]);
        }
    }

    #[test]
    fn weekday_morning_worker_options() {
        let w = world_at(0);
        let is_office = |a: &Agent| {
            a.age_group == AgeGroup::Worker
                && a.work_or_school
                    .is_some_and(|p| w.place(p).kind == PlaceKind::Workplace)
        };
        assert_eq!(
            kinds(&w, |a| is_office(a) && a.telework_capable),
            [
                ActivityKind::WorkAtOffice,
                ActivityKind::WorkAtHome,
                ActivityKind::StayHome
            ]
        );
        assert_eq!(
            kinds(&w, |a| is_office(a) && !a.telework_capable),
            [ActivityKind::WorkAtOffice, ActivityKind::StayHome]
        );
    }

    #[test]
    fn weekday_morning_child_options() {
        let w = world_at(0);
        assert_eq!(
            kinds(&w, |a| a.age_group == AgeGroup::Child),
            [ActivityKind::AttendSchool, ActivityKind::StayHome]
        );
    }

    #[test]
    fn weekend_is_free_time_and_sick_can_rest() {
        let mut w = world_at(5 * 4);
        let shop = w.places_of(PlaceKind::NonessentialShop).next().unwrap().id;
        let c = available_context(&w, &w.agents[0], Some(shop));
        assert_eq!(
            c.kinds(),
            [
                ActivityKind::ShopEssential,
                ActivityKind::ShopNonessential,
                ActivityKind::Leisure,
                ActivityKind::StayHome
            ]
        );
        w.agents[0].health.believes_sick = true;
        let c = available_context(&w, &w.agents[0], Some(shop));
        assert!(c.kinds().contains(&ActivityKind::RestAtHome));
    }
}
