"""Citation strings attached to every verdict in a classification report.

Kept in one place so report output stays consistent.
"""

ORIGIN_CONDITION = "Sec. 2.2 (origin of every arc is ordinary)"
SPECIALLY_ORIENTED = "Def. 2.5"
CHORDAL = "Def. 7.1; Prop. 7.2"
ELEMENTARY_TYPE = "Def. 2.9; Prop. 2.13; Fact 6.1"
KUMMERIAN = "Thm. 4.9"
LOCALLY_UNIFORM = "Cor. 4.10"
BLOCH_KATO = "Thm. 1.1 (0)<=>(ii); Prop. 5.5"
ONE_CYCLOTOMIC = "Thm. 1.1 (0)<=>(iii); Prop. 6.5"
GALOIS_REALIZABLE = "Thm. 1.1 (0)<=>(i)"
SUBGROUPS_ORRAAG = "Thm. 1.1 (0)<=>(v)"
BP_YES = "Thm. 1.3(i); Thm. 7.7"
BP_NO = "Thm. 4.9 (not Kummerian, so the property is undefined/fails)"
BP_OPEN = "open: equivalence with chordality only speculated after Thm. 1.3"
COHERENT_YES = "Thm. 1.3(ii)"
COHERENT_OPEN = "open: equivalence with chordality only speculated after Thm. 1.3"
QUADRATIC_CHORDAL = "Thm. 1.3(iii); Thm. 7.5"
QUADRATIC_TRIANGLE_FREE = "Example 4.12 (no triangles)"
QUADRATIC_OPEN = "open: Question 1.4(2)"
INVALID_INPUT = "input is not a valid oriented graph"
