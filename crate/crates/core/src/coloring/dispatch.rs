use serde::Serialize;

use super::pipeline::{per_component, require_free, ComponentResult};
use super::{p5, p6, p7, thm32, Certified, ColoringError, Strategy, Theorem, TriangleFreeColorer};
use crate::graph::Graph;
use crate::oracle;
use crate::recognition::{find_induced_path, Pattern, DEFAULT_PERFECT_LIMIT};

/// Which colorer handled a component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorerChoice {
    P5,
    P6,
    P7,
    Thm32,
}

/// Picks, per component, the colorer with the smallest claimed bound among
/// those whose path hypothesis holds (ties go to the shorter path), and
/// falls back to the general pipeline with exact triangle-free coloring.
pub fn color_dispatch(g: &Graph) -> Result<(Certified, Vec<ColorerChoice>), ColoringError> {
    require_free(g, &[Pattern::Bull, Pattern::Diamond])?;
    let mut choices = Vec::new();
    let (c, cert, _) = per_component(g, |h| {
        let (choice, r) = component(h)?;
        choices.push(choice);
        Ok(r)
    })?;
    Ok(((c, cert), choices))
}

fn component(h: &Graph) -> Result<(ColorerChoice, ComponentResult), ColoringError> {
    let omega = oracle::clique_number(h);
    let mut options: Vec<(usize, ColorerChoice)> = Vec::new();
    let p5_ok = find_induced_path(h, 5).is_none();
    if p5_ok && (omega <= 2 || h.n() <= DEFAULT_PERFECT_LIMIT) {
        options.push((omega.max(3), ColorerChoice::P5));
    }
    if p5_ok || find_induced_path(h, 6).is_none() {
        options.push((if omega == 2 { 4 } else { omega }, ColorerChoice::P6));
    }
    if find_induced_path(h, 7).is_none() {
        options.push((omega.max(7), ColorerChoice::P7));
    }
    let choice = options
        .iter()
        .min_by_key(|(bound, _)| *bound)
        .map(|&(_, c)| c)
        .unwrap_or(ColorerChoice::Thm32);
    let r = match choice {
        ColorerChoice::P5 => p5::component(h, Strategy::Exact)?,
        ColorerChoice::P6 => p6::component(h, Strategy::Exact)?,
        ColorerChoice::P7 => p7::component(h, Strategy::Exact)?,
        ColorerChoice::Thm32 => thm32::component(h, &TriangleFreeColorer::exact(), Theorem::Thm32)?,
    };
    Ok((choice, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::NamedGraph;

    #[test]
    fn routing_examples() {
        let ((c, cert), choice) = color_dispatch(&NamedGraph::Cycle(5).build().unwrap()).unwrap();
        assert_eq!((c.palette, cert.claimed_bound, choice[0]), (3, 3, ColorerChoice::P5));
        let ((c, _), choice) = color_dispatch(&NamedGraph::Grotzsch.build().unwrap()).unwrap();
        assert_eq!((c.palette, choice[0]), (4, ColorerChoice::P6));
        let ((c, cert), choice) = color_dispatch(&NamedGraph::Cycle(9).build().unwrap()).unwrap();
        assert_eq!(choice[0], ColorerChoice::Thm32);
        assert!(c.palette <= cert.claimed_bound);
    }
}
