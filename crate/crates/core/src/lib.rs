//! Exact computations around tilting modules that come from ring
//! epimorphisms: linear algebra over prime fields, the rationals and the
//! integers; quiver representations with Ext, Tor and the Auslander-Reiten
//! translate; perpendicular classes of bound modules; finitely generated
//! abelian groups and localizations of the integers; and free group algebras.

pub mod exactlin;
pub mod quiverrep;
pub mod artheory;
pub mod perpcat;
pub mod dedekind;
pub mod freegrp;
