//! Combinatorial side of the seaweed index toolkit: integer partitions and
//! compositions, constrained partition enumeration, meander graphs with
//! their cycle/path census, and exhaustive index statistics.
//!
//! Everything in this crate works by explicit construction and
//! enumeration, never by generating-function manipulation. The series
//! machinery lives in a separate crate with no dependency edge back here,
//! so identity checks that compare the two routes compare genuinely
//! independent computations.

pub mod meander;
pub mod partition;
pub mod stats;

pub use meander::{
    index_parity_from_odd_parts, path_count_from_odd_parts, seaweed_index, ComponentCount,
    Meander, MeanderError, RenderFormat,
};
pub use partition::{
    count_partitions, for_each_partition, partitions_of, Composition, Partition, PartitionClass,
    PartitionError, PartitionStream,
};
pub use stats::{
    bottom_swap_preserves_index_parity, conjugated_index, conjugated_meander_cycles,
    defect_count, index_excess, parity_census, partition_index, signed_index_excess,
    BottomVariant, DefectTable, StatRecord,
};
