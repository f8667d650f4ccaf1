/* Adjacency-list graph with breadth-first reachability over int vertex ids. */

struct Edge {
    int to;
    struct Edge *next;
};

struct Vertex {
    int id;
    int visited;
    int distance;
    struct Edge *edges;
    struct Vertex *next;
};

struct Vertex *vertex_find(struct Vertex *all, int id) {
    while (all != NULL && all->id != id) {
        all = all->next;
    }
    return all;
}

struct Vertex *vertex_add(struct Vertex *all, int id) {
    struct Vertex *v = vertex_find(all, id);
    if (v != NULL) {
        return all;
    }
    v = malloc(40);
    v->id = id;
    v->visited = 0;
    v->distance = -1;
    v->edges = NULL;
    v->next = all;
    return v;
}

void edge_add(struct Vertex *all, int from, int to) {
    struct Vertex *v = vertex_find(all, from);
    struct Edge *e;
    if (v == NULL) {
        return;
    }
    e = malloc(16);
    e->to = to;
    e->next = v->edges;
    v->edges = e;
}

void reset_marks(struct Vertex *all) {
    while (all != NULL) {
        all->visited = 0;
        all->distance = -1;
        all = all->next;
    }
}

struct Pending {
    struct Vertex *vertex;
    struct Pending *next;
};

int bfs_distance(struct Vertex *all, int from, int to) {
    struct Pending *head = malloc(16);
    struct Pending *tail = head;
    struct Pending *p;
    struct Vertex *v = vertex_find(all, from);
    struct Vertex *w;
    struct Edge *e;
    reset_marks(all);
    if (v == NULL) {
        return -1;
    }
    v->visited = 1;
    v->distance = 0;
    head->vertex = v;
    head->next = NULL;
    while (head != NULL) {
        v = head->vertex;
        if (v->id == to) {
            return v->distance;
        }
        for (e = v->edges; e != NULL; e = e->next) {
            w = vertex_find(all, e->to);
            if (w != NULL && !w->visited) {
                w->visited = 1;
                w->distance = v->distance + 1;
                p = malloc(16);
                p->vertex = w;
                p->next = NULL;
                tail->next = p;
                tail = p;
            }
        }
        p = head;
        head = head->next;
        free(p);
    }
    return -1;
}

int count_reachable(struct Vertex *all, int from) {
    struct Vertex *v;
    int n = 0;
    bfs_distance(all, from, -1);
    for (v = all; v != NULL; v = v->next) {
        if (v->visited) {
            n = n + 1;
        }
    }
    return n;
}

int out_degree(struct Vertex *all, int id) {
    struct Vertex *v = vertex_find(all, id);
    struct Edge *e;
    int d = 0;
    if (v == NULL) {
        return 0;
    }
    for (e = v->edges; e != NULL; e = e->next) {
        d = d + 1;
    }
    return d;
}
