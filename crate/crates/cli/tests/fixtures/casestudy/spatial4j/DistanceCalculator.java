package org.locationtech.spatial4j.distance;

import org.locationtech.spatial4j.context.SpatialContext;
import org.locationtech.spatial4j.shape.Circle;
import org.locationtech.spatial4j.shape.Point;
import org.locationtech.spatial4j.shape.Rectangle;

/**
 * Performs distance calculations and related geometric operations.
 */
public interface DistanceCalculator {

    double distance(Point from, Point to);

    double distance(Point from, double toX, double toY);

    boolean within(Point from, double toX, double toY, double distance);

    Point pointOnBearing(Point from, double distDEG, double bearingDEG, SpatialContext ctx, Point reuse);

    Rectangle calcBoxByDistFromPt(Point from, double distDEG, SpatialContext ctx, Rectangle reuse);

    double calcBoxByDistFromPt_yHorizAxisDEG(Point from, double distDEG, SpatialContext ctx);

    double area(Rectangle rect);

    double area(Circle circle);
}
