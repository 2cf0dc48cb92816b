use crate::types::{AgeGroup, AgentId};
use crate::world::{Agent, Household};

/// While schools are closed, flag one adult per household with a living
/// child as that child's carer. Prefers the lowest-id adult who can work
/// from home, then the lowest-id adult. Only adults who are alive, not under
/// medical care and sleeping under the children's roof this week qualify.
///
/// With `schools_closed` false every flag is cleared. Returns the carers.
pub fn assign_caregivers(
    agents: &mut [Agent],
    households: &[Household],
    schools_closed: bool,
    week: u64,
) -> Vec<AgentId> {
    for a in agents.iter_mut() {
        a.is_caregiver = false;
    }
    if !schools_closed {
        return Vec::new();
    }
    let mut chosen = Vec::new();
    for h in households {
        let Some(child) = h
            .members
            .iter()
            .map(|id| &agents[id.index()])
            .find(|a| a.age_group == AgeGroup::Child && a.health.compartment.is_alive())
        else {
            continue;
        };
        let children_home = child.effective_home(week);
        let candidates: Vec<&Agent> = h
            .members
            .iter()
            .map(|id| &agents[id.index()])
            .filter(|a| {
                a.age_group.is_adult()
                    && a.health.compartment.is_alive()
                    && !a.health.compartment.is_under_care()
                    && a.effective_home(week) == children_home
            })
            .collect();
        let pick = candidates
            .iter()
            .filter(|a| a.telework_capable)
            .map(|a| a.id)
            .min()
            .or_else(|| candidates.iter().map(|a| a.id).min());
        if let Some(id) = pick {
            chosen.push(id);
        }
    }
    for id in &chosen {
        agents[id.index()].is_caregiver = true;
    }
    chosen
}
