"""Algebraic automata over finite carriers.

Two automaton models built on semigroup actions: final-output automata
(the output of a run is its last step's) and accumulating automata (the
outputs form a semigroup and multiply up along the run), together with
the constructions connecting them: the universal pair semigroup, exact
quotient decisions, cascade connections, wreath products and the
embedding of every cascade into them, serial connections, and the groups
generated by invertible word machines.
"""

from .core import (
    CapExceeded,
    CheckReport,
    Closure,
    FiniteSet,
    FunMap,
    PairElement,
    SemigroupTable,
    Transformation,
    VerificationError,
    Word,
    all_funmaps,
    all_transformations,
    all_words,
    close_generators,
    compose_transformations,
    evaluate_word,
    generate_semigroup,
    identity_transformation,
    kernel_classes,
    multiply_pair,
    trivial_semigroup,
)
from .first_type import (
    PureAutomatonFirst,
    Run,
    SemigroupAutomatonFirst,
    act_word,
    check_first_axioms,
    semigroupify,
    to_universal,
)
from .second_type import (
    GeneratorHom,
    PureAutomatonSecond,
    QuotientWitness,
    SemigroupAutomatonSecond,
    act_letters,
    check_second_axioms,
    free_extension_out,
    quotient_construct,
)
from .cascade import (
    CascadeTriplePure,
    CascadeTripleSemigroup,
    WreathElement,
    WreathProduct,
    cascade_pure,
    cascade_semigroup,
    check_pure_triple,
    check_semigroup_triple,
    check_semigroup_triple_morphism,
    check_triple_morphism,
    embed_into_wreath,
    product_set,
    wreath_automaton,
    wreath_product,
    wreath_semigroup,
    wreath_triple,
)
from .serial import (
    AutomatonMapping,
    NotInvertible,
    SerialConnection,
    apply_mapping,
    check_serial,
    decode_mapping,
    derive_second_type,
    reachable_states,
    semiautomaton,
    serial_action,
    serial_from_second,
)
from .mealy import (
    MealyElement,
    MealyMachine,
    OrderResult,
    element_apply,
    element_compose,
    element_equal,
    element_invert,
    element_order_bounded,
    grigorchuk_elements,
    grigorchuk_machine,
    identity_element,
    is_invertible,
    minimize_element,
    odometer,
)

__version__ = "0.1.0"
