package org.demo.util;

import java.util.List;

/* Block comment with words that must vanish */
public class NodeCache {
    private static final int MAX_SIZE = 0x1F;
    private List<Node> nodes;
    private double loadFactor = 0.75;

    // line comment
    public Node getNode(int i) {
        String label = "not an identifier";
        char c = 'x';
        for (int k = 0; k < MAX_SIZE; k++) {
            if (nodes.get(k).id == i) return nodes.get(k);
        }
        int _ = 42;
        int _tmp = i_;
        return nodes.get(0);
    }
}
