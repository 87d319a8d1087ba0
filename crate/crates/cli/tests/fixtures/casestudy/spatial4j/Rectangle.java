package org.locationtech.spatial4j.shape;

/**
 * Axis-aligned rectangle, possibly crossing the dateline.
 */
public interface Rectangle extends Shape {

    void reset(double minX, double maxX, double minY, double maxY);

    double getWidth();

    double getHeight();

    double getMinX();

    double getMinY();

    double getMaxX();

    double getMaxY();

    boolean getCrossesDateLine();

    SpatialRelation relateYRange(double minY, double maxY);

    SpatialRelation relateXRange(double minX, double maxX);
}
