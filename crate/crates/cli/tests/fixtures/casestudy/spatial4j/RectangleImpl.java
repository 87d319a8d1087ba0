package org.locationtech.spatial4j.shape.impl;

import org.locationtech.spatial4j.context.SpatialContext;
import org.locationtech.spatial4j.distance.DistanceUtils;
import org.locationtech.spatial4j.shape.BaseShape;
import org.locationtech.spatial4j.shape.Point;
import org.locationtech.spatial4j.shape.Rectangle;
import org.locationtech.spatial4j.shape.Shape;
import org.locationtech.spatial4j.shape.SpatialRelation;

/**
 * Rectangle defined by its minimum and maximum coordinates.
 */
public class RectangleImpl extends BaseShape<SpatialContext> implements Rectangle {

    private double minX;
    private double maxX;
    private double minY;
    private double maxY;

    public RectangleImpl(double minX, double maxX, double minY, double maxY, SpatialContext ctx) {
        super(ctx);
        reset(minX, maxX, minY, maxY);
    }

    public RectangleImpl(Point lowerLeft, Point upperRight, SpatialContext ctx) {
        this(lowerLeft.getX(), upperRight.getX(), lowerLeft.getY(), upperRight.getY(), ctx);
    }

    @Override
    public void reset(double minX, double maxX, double minY, double maxY) {
        assert !isEmpty();
        this.minX = minX;
        this.maxX = maxX;
        this.minY = minY;
        this.maxY = maxY;
        assert minY <= maxY || Double.isNaN(minY) : "minY, maxY: " + minY + ", " + maxY;
    }

    @Override
    public boolean isEmpty() {
        return Double.isNaN(minX);
    }

    @Override
    public boolean hasArea() {
        return maxX != minX && maxY != minY;
    }

    @Override
    public double getArea(SpatialContext ctx) {
        if (ctx == null) {
            return getWidth() * getHeight();
        }
        return ctx.getDistCalc().area(this);
    }

    @Override
    public boolean getCrossesDateLine() {
        return (minX > maxX);
    }

    @Override
    public double getHeight() {
        return maxY - minY;
    }

    @Override
    public double getWidth() {
        double w = maxX - minX;
        if (w < 0) {
            w += 360;
            assert w >= 0;
        }
        return w;
    }

    @Override
    public double getMaxX() {
        return maxX;
    }

    @Override
    public double getMaxY() {
        return maxY;
    }

    @Override
    public double getMinX() {
        return minX;
    }

    @Override
    public double getMinY() {
        return minY;
    }

    @Override
    public Rectangle getBoundingBox() {
        return this;
    }

    @Override
    public Point getCenter() {
        if (Double.isNaN(minX)) {
            return ctx.makePoint(Double.NaN, Double.NaN);
        }
        final double y = getHeight() / 2 + minY;
        double x = getWidth() / 2 + minX;
        if (minX > maxX) {
            x = DistanceUtils.normLonDEG(x);
        }
        return ctx.makePoint(x, y);
    }

    @Override
    public Shape getBuffered(double distance, SpatialContext ctx) {
        if (ctx.isGeo()) {
            Rectangle bbox = ctx.getDistCalc().calcBoxByDistFromPt(getCenter(), distance, ctx, null);
            return bbox;
        }
        return ctx.makeRectangle(minX - distance, maxX + distance, minY - distance, maxY + distance);
    }

    @Override
    public SpatialRelation relate(Shape other) {
        if (isEmpty() || other.isEmpty()) {
            return SpatialRelation.DISJOINT;
        }
        if (other instanceof Point) {
            return relate((Point) other);
        }
        if (other instanceof Rectangle) {
            return relate((Rectangle) other);
        }
        return other.relate(this).transpose();
    }

    public SpatialRelation relate(Point point) {
        if (point.getY() > getMaxY() || point.getY() < getMinY()) {
            return SpatialRelation.DISJOINT;
        }
        if (relateXRange(point.getX(), point.getX()) == SpatialRelation.DISJOINT) {
            return SpatialRelation.DISJOINT;
        }
        return SpatialRelation.CONTAINS;
    }

    public SpatialRelation relate(Rectangle rect) {
        SpatialRelation yIntersect = relateYRange(rect.getMinY(), rect.getMaxY());
        if (yIntersect == SpatialRelation.DISJOINT) {
            return SpatialRelation.DISJOINT;
        }
        SpatialRelation xIntersect = relateXRange(rect.getMinX(), rect.getMaxX());
        if (xIntersect == SpatialRelation.DISJOINT) {
            return SpatialRelation.DISJOINT;
        }
        if (xIntersect == yIntersect) {
            return xIntersect;
        }
        return SpatialRelation.INTERSECTS;
    }

    @Override
    public SpatialRelation relateYRange(double extMinY, double extMaxY) {
        return relateRange(minY, maxY, extMinY, extMaxY);
    }

    @Override
    public SpatialRelation relateXRange(double extMinX, double extMaxX) {
        double minX = this.minX;
        double maxX = this.maxX;
        if (ctx.isGeo()) {
            double rawWidth = maxX - minX;
            if (rawWidth < 0) {
                maxX = minX + (rawWidth + 360);
            }
            if (extMaxX < minX) {
                extMinX += 360;
                extMaxX += 360;
            } else if (extMinX > maxX) {
                extMinX -= 360;
                extMaxX -= 360;
            }
        }
        return relateRange(minX, maxX, extMinX, extMaxX);
    }

    private static SpatialRelation relateRange(double intMin, double intMax, double extMin, double extMax) {
        if (extMin > intMax || extMax < intMin) {
            return SpatialRelation.DISJOINT;
        }
        if (extMin >= intMin && extMax <= intMax) {
            return SpatialRelation.CONTAINS;
        }
        if (extMin <= intMin && extMax >= intMax) {
            return SpatialRelation.WITHIN;
        }
        return SpatialRelation.INTERSECTS;
    }

    @Override
    public String toString() {
        return "Rect(minX=" + minX + ",maxX=" + maxX + ",minY=" + minY + ",maxY=" + maxY + ")";
    }
}
