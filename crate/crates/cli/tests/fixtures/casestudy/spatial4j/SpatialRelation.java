package org.locationtech.spatial4j.shape;

/**
 * Spatial relationship between two shapes.
 */
public enum SpatialRelation {
    WITHIN,
    CONTAINS,
    DISJOINT,
    INTERSECTS;

    public SpatialRelation transpose() {
        switch (this) {
        case CONTAINS:
            return SpatialRelation.WITHIN;
        case WITHIN:
            return SpatialRelation.CONTAINS;
        default:
            return this;
        }
    }

    public SpatialRelation combine(SpatialRelation other) {
        if (this == other) {
            return this;
        }
        if (this == DISJOINT && other == CONTAINS || this == CONTAINS && other == DISJOINT) {
            return CONTAINS;
        }
        return INTERSECTS;
    }

    public boolean intersects() {
        return this != DISJOINT;
    }

    public SpatialRelation inverse() {
        switch (this) {
        case DISJOINT:
            return CONTAINS;
        case CONTAINS:
            return DISJOINT;
        case WITHIN:
            return INTERSECTS;
        default:
            return INTERSECTS;
        }
    }
}
